#include "volterra/experiments.hpp"

#include "volterra/norms.hpp"
#include "volterra/perturbation.hpp"
#include "volterra/rng.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace volterra {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// Runs fn(0..count-1) across workers in contiguous blocks. Each index must
// write only its own slots; ordering across indices is then immaterial.
void parallel_trials(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1 || count < 2) {
    for (std::size_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t t = lo; t < hi; ++t) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("VOLTERRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
    return 1;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "parameter,p,value,family,n,trials,seed\n";
  for (const SweepRow& r : rows) {
    os << shortest(r.parameter) << ',' << r.p.label() << ',' << shortest(r.value)
       << ',' << r.family << ',' << r.n << ',' << r.trials << ',' << r.seed
       << '\n';
  }
}

void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(os, rows);
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<SweepRow> noise_error(const NoiseConfig& cfg) {
  if (!cfg.f) throw std::invalid_argument("noise_error needs a signal");
  if (cfg.n_values.empty() || cfg.p_values.empty() || cfg.trials == 0)
    throw std::invalid_argument("noise_error needs n values, p values, trials");
  for (std::size_t k = 1; k < cfg.n_values.size(); ++k)
    if (cfg.n_values[k] <= cfg.n_values[k - 1])
      throw std::invalid_argument("n values must be strictly increasing");
  if (!(cfg.variance > 0.0))
    throw std::invalid_argument("variance must be positive");
  if (cfg.ref_oversample < 1)
    throw std::invalid_argument("ref_oversample must be >= 1");

  // One reference per p, far above the finest sweep resolution.
  const std::size_t ref_n = cfg.ref_oversample * cfg.n_values.back();
  const Signal ref_samples = Signal::sample(cfg.f, ref_n);
  std::vector<double> ref;
  ref.reserve(cfg.p_values.size());
  for (const Exponent& p : cfg.p_values) {
    const double r = volterra_norm(ref_samples, p);
    if (r == 0.0)
      throw std::invalid_argument("reference Volterra norm is zero");
    ref.push_back(r);
  }

  const double sd = std::sqrt(cfg.variance);
  std::vector<SweepRow> rows;
  rows.reserve(cfg.n_values.size() * cfg.p_values.size());
  for (std::size_t n : cfg.n_values) {
    const Signal x = Signal::sample(cfg.f, n);
    for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi) {
      const Exponent p = cfg.p_values[pi];
      std::vector<double> err(cfg.trials);
      parallel_trials(cfg.trials, [&](std::size_t t) {
        StreamRng rng(derive_stream(cfg.seed, n, pi, t));
        std::vector<double> y(n);
        for (std::size_t j = 0; j < n; ++j) y[j] = x[j] + sd * rng.gaussian();
        const double norm = volterra_norm(Signal(std::move(y)), p);
        err[t] = std::abs(norm - ref[pi]) / ref[pi];
      });
      double mean = 0.0;
      for (double e : err) mean += e;  // fixed trial order
      mean /= static_cast<double>(cfg.trials);
      rows.push_back({static_cast<double>(n), p, mean, "volterra", n,
                      cfg.trials, cfg.seed});
    }
  }
  return rows;
}

NoiseNormStats pure_noise_norm(const std::vector<double>& sigmas, Exponent p,
                               std::size_t trials, std::uint64_t seed) {
  const std::size_t n = sigmas.size();
  if (n == 0 || trials == 0)
    throw std::invalid_argument("pure_noise_norm needs sigmas and trials");
  for (double s : sigmas)
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::invalid_argument("sigmas must be finite and >= 0");

  NoiseNormStats out{0.0, 0.0, std::vector<double>(trials)};
  parallel_trials(trials, [&](std::size_t t) {
    StreamRng rng(derive_stream(seed, n, 0, t));
    std::vector<double> z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = sigmas[j] * rng.gaussian();
    out.norms[t] = volterra_norm(Signal(std::move(z)), p);
  });
  double mean = 0.0;
  for (double v : out.norms) mean += v;
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (double v : out.norms) var += (v - mean) * (v - mean);
  var /= static_cast<double>(trials);
  out.mean = mean;
  out.std_error = std::sqrt(var / static_cast<double>(trials));
  return out;
}

std::vector<SweepRow> shift_sweep(const ShiftConfig& cfg) {
  if (!cfg.f) throw std::invalid_argument("shift_sweep needs a signal");
  if (cfg.n < 2 || cfg.eps_values.empty() || cfg.p_values.empty())
    throw std::invalid_argument("shift_sweep needs n >= 2, eps values, p values");

  const Signal x = Signal::sample(cfg.f, cfg.n);
  std::vector<double> denom;
  denom.reserve(cfg.p_values.size());
  for (const Exponent& p : cfg.p_values) {
    const double d = p_norm(x, p);
    if (d == 0.0) throw std::invalid_argument("signal p-norm is zero");
    denom.push_back(d);
  }

  std::vector<SweepRow> rows;
  rows.reserve(2 * cfg.eps_values.size() * cfg.p_values.size());
  const double nd = static_cast<double>(cfg.n);
  for (double eps : cfg.eps_values) {
    const auto steps = static_cast<std::ptrdiff_t>(std::llround(eps * nd));
    const Signal moved = shift(x, steps);
    for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi) {
      const Exponent p = cfg.p_values[pi];
      rows.push_back({eps, p, volterra_distance(x, moved, p) / denom[pi],
                      "volterra", cfg.n, 1, cfg.seed});
      rows.push_back({eps, p, p_norm(subtract(x, moved), p) / denom[pi],
                      "plain", cfg.n, 1, cfg.seed});
    }
  }
  return rows;
}

std::vector<SweepRow> projection_sweep(const Grid2D& F, const RadonConfig& cfg) {
  if (cfg.theta_values.empty() || cfg.p_values.empty())
    throw std::invalid_argument("projection_sweep needs theta values, p values");

  const Signal base = project(F, 0.0, cfg.n, cfg.quadrature_nodes);
  std::vector<SweepRow> rows;
  rows.reserve(2 * cfg.theta_values.size() * cfg.p_values.size());
  for (double theta : cfg.theta_values) {
    const Signal f_theta = project(F, theta, cfg.n, cfg.quadrature_nodes);
    for (const Exponent& p : cfg.p_values) {
      rows.push_back({theta, p, volterra_distance(base, f_theta, p), "volterra",
                      cfg.n, 1, cfg.seed});
      rows.push_back({theta, p, p_norm(subtract(base, f_theta), p), "plain",
                      cfg.n, 1, cfg.seed});
    }
  }
  return rows;
}

}  // namespace volterra
