// Acceptance gate: one PASS/FAIL line per criterion, each with the measured
// quantity that decides it. Exit status is nonzero if any criterion fails.
//
//   1 oracle equivalence      fast emd/km paths agree with the independent
//                             transport and cdf oracles on random densities
//   2 dual certificates       certificates attain the norm and are feasible
//   3 discretization rate     sampled norms approach the refined reference
//                             like 1/n, uniformly in p and signal
//   4 noise decay             mean relative norm error falls like n^{-1/2}
//   5 noise mean and tail     pure-noise norms meet the sqrt(2*pi) mean
//                             bound and the Gaussian tail bound
//   6 shift bound             normalized shift response is within eps plus
//                             sampling slack; equality at p=1
//   7 projection bound        angle sweeps respect the sin(theta/2) bound
//                             and grow monotonically
//   8 plateau contrast        plain distances plateau once supports are
//                             disjoint while Volterra p<inf keeps growing
//   9 thread determinism      the CLI writes byte-identical CSV for
//                             VOLTERRA_THREADS in {1,4}

#include "volterra/catalogue.hpp"
#include "volterra/experiments.hpp"
#include "volterra/norms.hpp"
#include "volterra/oracles.hpp"
#include "volterra/radon.hpp"
#include "volterra/rng.hpp"
#include "volterra/signal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace volterra;
namespace fs = std::filesystem;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

Density random_density(StreamRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& e : v) e = rng.uniform();
  return Density::renormalized(Signal(std::move(v)));
}

// ---- 1: fast paths vs oracles ------------------------------------------

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  StreamRng rng(derive_stream(42, 64, 0, 0));
  const std::size_t pairs = 1200;
  double worst_emd = 0.0;
  double worst_km = 0.0;
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t n = 2 + rng.next_bits() % 63;  // n in [2, 64]
    const Density P = random_density(rng, n);
    const Density Q = random_density(rng, n);
    worst_emd = std::max(worst_emd, std::abs(emd(P, Q) - transport_emd(P, Q).cost));
    worst_km = std::max(worst_km, std::abs(km(P, Q) - cdf_max(P, Q)));
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst_emd <= 1e-9 && worst_km == 0.0 && elapsed < 10.0;
  return {pass, format("%zu pairs, worst emd gap %.2e (limit 1e-9), "
                       "worst km gap %.1e (limit exact), %.1f s (limit 10)",
                       pairs, worst_emd, worst_km, elapsed)};
}

// ---- 2: dual certificates ----------------------------------------------

Outcome dual_certificates() {
  StreamRng rng(derive_stream(42, 64, 1, 0));
  const Exponent ps[] = {Exponent::finite(1.0), Exponent::finite(1.5),
                         Exponent::finite(2.0), Exponent::finite(10.0),
                         Exponent::infinity()};
  const std::size_t trials = 1000;
  double worst_gap = 0.0;
  double worst_feas = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 2 + rng.next_bits() % 255;
    std::vector<double> v(n);
    for (auto& e : v) e = 2.0 * rng.uniform() - 1.0;
    const Signal x(std::move(v));
    const Exponent p = ps[t % 5];
    const DualCertificate cert = dual_certificate(x, p);
    worst_gap = std::max(worst_gap,
                         std::abs(cert.attained - volterra_norm(x, p)));
    worst_feas = std::max(worst_feas,
                          p_norm(cert.g, p.conjugate()) - 1.0);
  }
  const bool pass = worst_gap <= 1e-12 && worst_feas <= 1e-12;
  return {pass, format("%zu signals over p in {1,1.5,2,10,inf}, worst "
                       "attainment gap %.2e, worst infeasibility %.2e "
                       "(limits 1e-12)",
                       trials, worst_gap, std::max(worst_feas, 0.0))};
}

// ---- 3: discretization rate --------------------------------------------

Outcome discretization_rate() {
  struct Case {
    const char* name;
    std::function<double(double)> f;
    double bound_constant;  // sup|f| and Lipschitz constant, whichever larger
  };
  const Case cases[] = {
      {"constant", [](double) { return 1.0; }, 1.0},
      {"x-1/2", [](double x) { return x - 0.5; }, 1.0},
      {"triangle", catalogue("triangle").f, catalogue("triangle").lipschitz},
  };
  const Exponent ps[] = {Exponent::finite(1.0), Exponent::finite(2.0),
                         Exponent::infinity()};
  std::vector<std::size_t> levels = {100,  200,  400,   800,  1600,
                                     3200, 6400, 12800, 100000};
  const double floor = 1e-12;

  bool pass = true;
  double worst_excess = -1e300;  // err - 5L/n, most positive
  double ratio_lo = 1e300, ratio_hi = -1e300;
  std::size_t ratios_checked = 0, ratios_skipped = 0;
  for (const Case& c : cases) {
    for (const Exponent& p : ps) {
      const std::vector<double> norms = refine_norm(c.f, p, levels);
      const double ref = norms.back();
      std::vector<double> err(levels.size() - 1);
      for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        err[i] = std::abs(norms[i] - ref);
        const double bound =
            5.0 * c.bound_constant / static_cast<double>(levels[i]);
        worst_excess = std::max(worst_excess, err[i] - bound);
        if (err[i] > bound) pass = false;
      }
      for (std::size_t i = 0; i + 1 < err.size(); ++i) {
        if (err[i] <= floor && err[i + 1] <= floor) {
          ++ratios_skipped;  // converged exactly; nothing left to halve
          continue;
        }
        if (err[i] <= floor) {  // error grew out of an exact-zero start
          pass = false;
          continue;
        }
        const double r = err[i + 1] / err[i];
        ratio_lo = std::min(ratio_lo, r);
        ratio_hi = std::max(ratio_hi, r);
        ++ratios_checked;
        if (r < 0.35 || r > 0.65) pass = false;
      }
    }
  }
  return {pass, format("3 signals x 3 exponents, n = 100..12800 vs n = 1e5 "
                       "reference; worst err - 5L/n = %.2e, halving ratios "
                       "[%.3f, %.3f] over %zu doublings (%zu exact-zero "
                       "skipped; window [0.35, 0.65])",
                       worst_excess, ratio_lo, ratio_hi, ratios_checked,
                       ratios_skipped)};
}

// ---- 4: noise decay ------------------------------------------------------

Outcome noise_decay() {
  const auto t0 = std::chrono::steady_clock::now();
  NoiseConfig cfg;
  cfg.f = catalogue("triangle-diff").f;
  cfg.n_values = {1000, 2000, 4000, 8000, 16000, 32000};
  cfg.p_values = {Exponent::finite(1.0), Exponent::finite(2.0),
                  Exponent::infinity()};
  cfg.trials = 1000;
  cfg.variance = 2.0;
  cfg.seed = 2024;
  const std::vector<SweepRow> rows = noise_error(cfg);

  // err[pi][ni]
  std::vector<std::vector<double>> err(cfg.p_values.size());
  for (auto& column : err) column.resize(cfg.n_values.size());
  for (const SweepRow& row : rows)
    for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi)
      if (row.p == cfg.p_values[pi])
        for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni)
          if (row.n == cfg.n_values[ni]) err[pi][ni] = row.value;

  bool pass = true;
  double slope_lo = 1e300, slope_hi = -1e300;
  double ratio_lo = 1e300, ratio_hi = -1e300;
  for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi) {
    // Least-squares slope of log2 err against log2 n.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(cfg.n_values.size());
    for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
      const double x = std::log2(static_cast<double>(cfg.n_values[ni]));
      const double y = std::log2(err[pi][ni]);
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    slope_lo = std::min(slope_lo, slope);
    slope_hi = std::max(slope_hi, slope);
    if (slope < -0.6 || slope > -0.4) pass = false;
    for (std::size_t ni = 0; ni + 2 < cfg.n_values.size(); ++ni) {
      const double r = err[pi][ni + 2] / err[pi][ni];  // n quadrupled
      ratio_lo = std::min(ratio_lo, r);
      ratio_hi = std::max(ratio_hi, r);
      if (r < 0.35 || r > 0.65) pass = false;
    }
  }

  // Informational only: an M = 100000 study of the same design, with its own
  // (differently calibrated) triangle pair, reached the errors on the right.
  // The decay rate transfers; the absolute values need not.
  static const double reference[3][6] = {
      {3.492e-01, 2.419e-01, 1.707e-01, 1.204e-01, 8.517e-02, 6.050e-02},
      {1.982e-01, 1.448e-01, 1.055e-01, 7.519e-02, 5.338e-02, 3.790e-02},
      {1.674e-01, 1.201e-01, 8.518e-02, 5.975e-02, 4.218e-02, 2.978e-02},
  };
  std::printf("    informational: mean relative error (measured | M=1e5 "
              "reference study)\n");
  std::printf("    %8s  %23s  %23s  %23s\n", "n", "p=1", "p=2", "p=inf");
  for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni)
    std::printf("    %8zu  %.3e | %.3e  %.3e | %.3e  %.3e | %.3e\n",
                cfg.n_values[ni], err[0][ni], reference[0][ni], err[1][ni],
                reference[1][ni], err[2][ni], reference[2][ni]);

  const double elapsed = seconds_since(t0);
  if (elapsed >= 300.0) pass = false;
  return {pass, format("M=1000, n = 1000..32000: log-log slopes "
                       "[%.3f, %.3f] (window [-0.6, -0.4]), quadrupling "
                       "ratios [%.3f, %.3f] (window [0.35, 0.65]), %.0f s "
                       "(limit 300)",
                       slope_lo, slope_hi, ratio_lo, ratio_hi, elapsed)};
}

// ---- 5: noise mean and tail ---------------------------------------------

Outcome noise_mean_and_tail() {
  const std::size_t n = 1000, trials = 1000;
  const double sigma = std::sqrt(2.0);
  const std::vector<double> sigmas(n, sigma);
  const NoiseNormStats stats =
      pure_noise_norm(sigmas, Exponent::infinity(), trials, 5);

  const double mean_bound =
      std::sqrt(2.0 * std::numbers::pi) * sigma / std::sqrt(double(n));
  const double mean_limit = mean_bound + 3.0 * stats.std_error;
  bool pass = stats.mean <= mean_limit;

  // Tail: fraction of trials with norm >= t against 2 exp(-n t^2 / (2 s^2)).
  double worst_tail_excess = -1e300;
  for (int i = 1; i <= 10; ++i) {
    const double t = 0.02 * i;
    std::size_t count = 0;
    for (double v : stats.norms) count += v >= t;
    const double freq = static_cast<double>(count) / double(trials);
    const double bound =
        2.0 * std::exp(-double(n) * t * t / (2.0 * sigma * sigma));
    const double se = std::sqrt(freq * (1.0 - freq) / double(trials));
    worst_tail_excess = std::max(worst_tail_excess, freq - bound - 3.0 * se);
    if (freq > bound + 3.0 * se) pass = false;
  }
  return {pass, format("n=1000, M=1000, p=inf: mean %.4f <= %.4f "
                       "(sqrt(2pi)*sigma/sqrt(n) + 3 SE); worst tail "
                       "freq - bound - 3 SE = %.2e over 10 thresholds",
                       stats.mean, mean_limit, worst_tail_excess)};
}

// ---- 6: shift bound ------------------------------------------------------

Outcome shift_bound() {
  ShiftConfig cfg;
  cfg.f = catalogue("triangle").f;
  const double lipschitz = catalogue("triangle").lipschitz;
  cfg.n = 2000;
  for (int i = 1; i <= 60; ++i) cfg.eps_values.push_back(0.01 * i);
  cfg.p_values = {Exponent::finite(1.0), Exponent::finite(2.0),
                  Exponent::finite(10.0), Exponent::infinity()};
  const std::vector<SweepRow> rows = shift_sweep(cfg);

  const double slack = 4.0 * lipschitz / static_cast<double>(cfg.n);
  const double equality_slack = 2.0 * lipschitz / static_cast<double>(cfg.n);
  bool pass = true;
  double worst_excess = -1e300;       // value - (eps + 4L/n)
  double worst_equality_gap = 0.0;    // |value - eps| at p = 1
  for (const SweepRow& row : rows) {
    if (row.family != "volterra") continue;
    worst_excess = std::max(worst_excess, row.value - row.parameter - slack);
    if (row.value > row.parameter + slack) pass = false;
    if (row.p == Exponent::finite(1.0)) {
      const double gap = std::abs(row.value - row.parameter);
      worst_equality_gap = std::max(worst_equality_gap, gap);
      if (gap > equality_slack) pass = false;
    }
  }
  return {pass, format("triangle, n=2000, eps = 0.01..0.60, p in "
                       "{1,2,10,inf}: worst value - (eps + 4L/n) = %.2e; "
                       "p=1 worst |value - eps| = %.2e (limit 2L/n = %.3f)",
                       worst_excess, worst_equality_gap, equality_slack)};
}

// ---- 7: projection bound -------------------------------------------------

Outcome projection_bound_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid2D F = two_gaussian_grid(512, 0.001);
  RadonConfig cfg;
  cfg.n = 512;
  // Dense where the bound is certified, coarse over the flat tail. Angles
  // past ~1.42 rad (other than pi/2 itself) park a bump center within a
  // couple of grid cells of the detector edge, where the asymmetric sample
  // coverage of x in (-1/2, 1/2] perturbs the captured mass by ~1e-5 - an
  // m=512 discretization artifact, not a property of the distances.
  for (int i = 0; i <= 6; ++i)
    cfg.theta_values.push_back(i * std::numbers::pi / 24.0);  // up to pi/4
  cfg.theta_values.push_back(std::numbers::pi / 3.0);
  cfg.theta_values.push_back(5.0 * std::numbers::pi / 12.0);
  cfg.theta_values.push_back(std::numbers::pi / 2.0);
  const std::size_t angles = cfg.theta_values.size();
  // 4x quadrature: the trapezoid error at the default node count shows up
  // as ~4e-6 angle-to-angle jitter, above the monotonicity slack.
  cfg.quadrature_nodes = 2048;
  cfg.p_values = {Exponent::finite(1.0), Exponent::finite(2.0),
                  Exponent::finite(10.0), Exponent::infinity()};
  const std::vector<SweepRow> rows = projection_sweep(F, cfg);

  bool pass = true;
  double worst_excess = -1e300;  // distance - (bound + 1e-3 * Fp)
  double worst_drop = 0.0;       // most negative growth step
  for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi) {
    const Exponent p = cfg.p_values[pi];
    const double fp = grid_p_norm(F, p);
    std::vector<double> distance(angles, 0.0);
    for (const SweepRow& row : rows)
      if (row.family == "volterra" && row.p == p)
        for (std::size_t i = 0; i < angles; ++i)
          if (row.parameter == cfg.theta_values[i]) distance[i] = row.value;

    for (std::size_t i = 1; i < angles; ++i) {  // bound asserted on (0, pi/4]
      const ProjectionBound b =
          projection_bound(cfg.theta_values[i], 0.0, fp);
      if (!b.certified) continue;  // beyond pi/4: growth check only
      const double limit = b.value + 1e-3 * fp;
      worst_excess = std::max(worst_excess, distance[i] - limit);
      if (distance[i] > limit) pass = false;
    }
    for (std::size_t i = 0; i + 1 < angles; ++i) {
      worst_drop = std::min(worst_drop, distance[i + 1] - distance[i]);
      if (distance[i + 1] < distance[i] - 1e-6) pass = false;
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 120.0) pass = false;
  return {pass, format("two-gaussian m=512 sigma=0.001, n=512, %zu angles, "
                       "p in {1,2,10,inf}: worst distance - bound - "
                       "1e-3*|F|_p = %.2e over theta in (0, pi/4]; worst growth "
                       "step %.1e (slack 1e-6) over [0, pi/2]; %.0f s "
                       "(limit 120)",
                       angles, worst_excess, worst_drop, elapsed)};
}

// ---- 8: plateau contrast --------------------------------------------------

Outcome plateau_contrast() {
  ShiftConfig cfg;
  cfg.f = catalogue("triangle").f;
  cfg.n = 2000;
  cfg.eps_values = {0.50, 0.53, 0.56, 0.59};
  cfg.p_values = {Exponent::finite(1.0), Exponent::finite(2.0),
                  Exponent::finite(10.0), Exponent::infinity()};
  const std::vector<SweepRow> rows = shift_sweep(cfg);

  const auto value = [&](const char* family, const Exponent& p,
                         double eps) {
    for (const SweepRow& row : rows)
      if (row.family == family && row.p == p && row.parameter == eps)
        return row.value;
    return -1.0;
  };

  bool pass = true;
  double worst_plateau_gap = 0.0;
  for (const Exponent& p : cfg.p_values) {
    const double gap =
        std::abs(value("plain", p, 0.50) - value("plain", p, 0.59));
    worst_plateau_gap = std::max(worst_plateau_gap, gap);
    if (gap > 1e-6) pass = false;
  }
  double smallest_rise = 1e300;
  for (const Exponent& p : {Exponent::finite(1.0), Exponent::finite(2.0),
                            Exponent::finite(10.0)}) {
    for (std::size_t i = 0; i + 1 < cfg.eps_values.size(); ++i) {
      const double rise = value("volterra", p, cfg.eps_values[i + 1]) -
                          value("volterra", p, cfg.eps_values[i]);
      smallest_rise = std::min(smallest_rise, rise);
      if (!(rise > 0.0)) pass = false;
    }
  }
  return {pass, format("triangle, n=2000, eps 0.50 -> 0.59: plain distance "
                       "plateau gap %.1e (limit 1e-6) for p in {1,2,10,inf}; "
                       "Volterra p in {1,2,10} strictly grows (smallest "
                       "step %.2e)",
                       worst_plateau_gap, smallest_rise)};
}

// ---- 9: thread determinism ------------------------------------------------

std::string read_bytes(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Outcome thread_determinism(const std::string& cli) {
  fs::path dir = fs::temp_directory_path() /
                 ("volterra-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path config = dir / "noise.json";
  {
    std::ofstream os(config);
    os << R"({"signal": "triangle-diff", "n": [256, 512],)"
       << R"( "p": [1, 2, "inf"], "trials": 64, "variance": 2,)"
       << R"( "seed": 11, "ref_oversample": 8})" << '\n';
  }

  const auto run = [&](int threads, const fs::path& out) {
    const std::string cmd = "VOLTERRA_THREADS=" + std::to_string(threads) +
                            " '" + cli + "' experiment noise --config '" +
                            config.string() + "' --out '" + out.string() +
                            "'";
    return std::system(cmd.c_str());
  };

  const fs::path a = dir / "a.csv", b = dir / "b.csv", c = dir / "c.csv";
  const int rc = run(1, a) | run(1, b) | run(4, c);
  const std::string bytes_a = read_bytes(a);
  const bool pass = rc == 0 && !bytes_a.empty() &&
                    bytes_a == read_bytes(b) && bytes_a == read_bytes(c);
  fs::remove_all(dir);
  return {pass, format("noise sweep run twice with 1 worker and once with "
                       "4: %s (%zu bytes each)",
                       pass ? "byte-identical" : "MISMATCH or nonzero exit",
                       bytes_a.size())};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path-to-volterra-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"oracle-equivalence", oracle_equivalence},
      {"dual-certificates", dual_certificates},
      {"discretization-rate", discretization_rate},
      {"noise-decay", noise_decay},
      {"noise-mean-and-tail", noise_mean_and_tail},
      {"shift-bound", shift_bound},
      {"projection-bound", projection_bound_sweep},
      {"plateau-contrast", plateau_contrast},
      {"thread-determinism", [&cli] { return thread_determinism(cli); }},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const Outcome outcome = c.run();
    std::printf("%s %d %s (%s)\n", outcome.pass ? "PASS" : "FAIL", index,
                c.name, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  if (failures != 0) {
    std::printf("%d of 9 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
