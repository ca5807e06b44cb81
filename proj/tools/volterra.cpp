// Command-line front end: norms and distances of sampled signals, the
// noise/shift/projection studies, grid generation, and a self-check that
// plays the fast paths against the independent oracles.

#include "volterra/catalogue.hpp"
#include "volterra/experiments.hpp"
#include "volterra/norms.hpp"
#include "volterra/oracles.hpp"
#include "volterra/radon.hpp"
#include "volterra/rng.hpp"
#include "volterra/signal.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using namespace volterra;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBadExponent = 3;
constexpr int kExitLengthMismatch = 4;
constexpr int kExitDensityError = 5;

struct SignalParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExponentOptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Exponent parse_exponent(const std::string& text) {
  try {
    return Exponent::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ExponentOptionError(e.what());
  }
}

// One value per line, or one CSV column (1-based) when column > 0. Blank
// lines and lines starting with '#' are skipped.
Signal read_signal(const std::string& path, std::size_t column) {
  std::ifstream is(path);
  if (!is) throw SignalParseError("cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;

    std::string field = line;
    if (column > 0) {
      std::size_t start = 0;
      for (std::size_t c = 1; c < column; ++c) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos)
          throw SignalParseError(path + ":" + std::to_string(lineno) +
                                 ": fewer than " + std::to_string(column) +
                                 " columns");
        start = comma + 1;
      }
      std::size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      field = line.substr(start, end - start);
    }

    const char* first = field.data();
    const char* last = first + field.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (last[-1] == ' ' || last[-1] == '\t')) --last;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
      throw SignalParseError(path + ":" + std::to_string(lineno) +
                             ": cannot parse value");
    values.push_back(v);
  }
  if (values.empty()) throw SignalParseError(path + ": no samples");
  return Signal(std::move(values));
}

void print_value(double v) { std::printf("%.12f\n", v); }

// ---- experiment configs ----------------------------------------------

[[noreturn]] void config_error(const std::string& what) {
  throw SignalParseError("config: " + what);
}

double json_number(const json& j, const std::string& key) {
  if (!j.is_number()) config_error("'" + key + "' must be a number");
  return j.get<double>();
}

std::vector<double> parse_value_grid(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(json_number(e, key));
  } else if (j.is_object() && j.contains("start") && j.contains("stop") &&
             j.contains("count")) {
    const double start = json_number(j["start"], key + ".start");
    const double stop = json_number(j["stop"], key + ".stop");
    const auto count = j["count"].get<std::int64_t>();
    if (count < 2) config_error("'" + key + ".count' must be >= 2");
    for (std::int64_t i = 0; i < count; ++i)
      out.push_back(start + (stop - start) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
  } else {
    config_error("'" + key + "' must be an array or {start, stop, count}");
  }
  if (out.empty()) config_error("'" + key + "' is empty");
  return out;
}

std::vector<Exponent> parse_exponent_list(const json& j) {
  if (!j.is_array() || j.empty()) config_error("'p' must be a nonempty array");
  std::vector<Exponent> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(parse_exponent(e.get<std::string>()));
    else if (e.is_number())
      out.push_back(Exponent::finite(e.get<double>()));
    else
      config_error("'p' entries must be numbers or \"inf\"");
  }
  return out;
}

json load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw SignalParseError("cannot open config '" + path + "'");
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw SignalParseError("config '" + path + "': " + e.what());
  }
}

template <typename T>
T config_get(const json& cfg, const std::string& key, const T& fallback) {
  if (!cfg.contains(key)) return fallback;
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    config_error("'" + key + "' has the wrong type");
  }
}

void require_keys(const json& cfg, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (!cfg.contains(k)) config_error(std::string("missing key '") + k + "'");
}

Grid2D grid_from_config(const json& g) {
  if (g.is_object() && g.contains("csv"))
    return read_grid_csv(g.at("csv").get<std::string>());
  if (g.is_object() && g.contains("builtin")) {
    const auto name = g.at("builtin").get<std::string>();
    if (name != "two-gaussian") config_error("unknown builtin grid '" + name + "'");
    require_keys(g, {"m", "sigma"});
    const auto m = g.at("m").get<std::size_t>();
    const double sigma = json_number(g.at("sigma"), "sigma");
    const double tol = config_get<double>(g, "support_tolerance", 1.0);
    return two_gaussian_grid(m, sigma, tol);
  }
  config_error("'grid' must carry either 'csv' or 'builtin'");
}

int run_experiment(const std::string& kind, const std::string& config_path,
                   const std::string& out_path, const std::string& manifest_path) {
  const json cfg = load_config(config_path);
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<SweepRow> rows;
  if (kind == "noise") {
    require_keys(cfg, {"signal", "n", "p", "trials", "variance", "seed"});
    NoiseConfig nc;
    nc.f = catalogue(cfg.at("signal").get<std::string>()).f;
    for (const auto& e : cfg.at("n")) nc.n_values.push_back(e.get<std::size_t>());
    nc.p_values = parse_exponent_list(cfg.at("p"));
    nc.trials = cfg.at("trials").get<std::size_t>();
    nc.variance = json_number(cfg.at("variance"), "variance");
    nc.seed = cfg.at("seed").get<std::uint64_t>();
    nc.ref_oversample = config_get<std::size_t>(cfg, "ref_oversample", 16);
    rows = noise_error(nc);
  } else if (kind == "shift") {
    require_keys(cfg, {"signal", "n", "eps", "p"});
    ShiftConfig sc;
    sc.f = catalogue(cfg.at("signal").get<std::string>()).f;
    sc.n = cfg.at("n").get<std::size_t>();
    sc.eps_values = parse_value_grid(cfg.at("eps"), "eps");
    sc.p_values = parse_exponent_list(cfg.at("p"));
    sc.seed = config_get<std::uint64_t>(cfg, "seed", 0);
    rows = shift_sweep(sc);
  } else if (kind == "radon") {
    require_keys(cfg, {"grid", "n", "theta", "p"});
    RadonConfig rc;
    rc.n = cfg.at("n").get<std::size_t>();
    rc.theta_values = parse_value_grid(cfg.at("theta"), "theta");
    rc.p_values = parse_exponent_list(cfg.at("p"));
    rc.quadrature_nodes = config_get<std::size_t>(cfg, "quadrature_nodes", 0);
    rc.seed = config_get<std::uint64_t>(cfg, "seed", 0);
    const Grid2D F = grid_from_config(cfg.at("grid"));
    rows = projection_sweep(F, rc);
  } else {
    config_error("unknown experiment kind '" + kind + "'");
  }

  write_csv(out_path, rows);

  if (!manifest_path.empty()) {
    const auto t1 = std::chrono::steady_clock::now();
    json manifest;
    manifest["kind"] = kind;
    manifest["config"] = cfg;
    manifest["git_describe"] = VOLTERRA_GIT_DESCRIBE;
    manifest["threads"] = worker_count();
    manifest["rows"] = rows.size();
    manifest["wall_time_seconds"] =
        std::chrono::duration<double>(t1 - t0).count();
    std::ofstream os(manifest_path);
    if (!os) throw SignalParseError("cannot write manifest '" + manifest_path + "'");
    os << manifest.dump(2) << '\n';
  }
  return 0;
}

// ---- verify -----------------------------------------------------------

Density random_density(StreamRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& e : v) e = rng.uniform();
  return Density::renormalized(Signal(std::move(v)));
}

int run_verify(std::size_t n_max, std::size_t trials, std::uint64_t seed,
               bool corrupt) {
  bool ok = true;
  const auto report = [&](const char* name, bool pass, double worst) {
    std::printf("%s %s (worst %.3e)\n", pass ? "PASS" : "FAIL", name, worst);
    if (!pass) ok = false;
  };

  {
    StreamRng rng(derive_stream(seed, n_max, 0, 0));
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 2 + rng.next_bits() % (n_max - 1);
      const Density P = random_density(rng, n);
      const Density Q = random_density(rng, n);
      double fast = emd(P, Q);
      if (corrupt) fast *= 1.0 + 1e-6;
      worst = std::max(worst, std::abs(fast - transport_emd(P, Q).cost));
    }
    report("emd-vs-transport", worst <= 1e-9, worst);
  }
  {
    StreamRng rng(derive_stream(seed, n_max, 1, 0));
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 2 + rng.next_bits() % (n_max - 1);
      const Density P = random_density(rng, n);
      const Density Q = random_density(rng, n);
      worst = std::max(worst, std::abs(km(P, Q) - cdf_max(P, Q)));
    }
    report("km-vs-cdf-gap", worst == 0.0, worst);
  }
  {
    StreamRng rng(derive_stream(seed, n_max, 2, 0));
    const Exponent ps[] = {Exponent::finite(1.0), Exponent::finite(1.5),
                           Exponent::finite(2.0), Exponent::finite(10.0),
                           Exponent::infinity()};
    double worst_gap = 0.0, worst_feas = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 2 + rng.next_bits() % (n_max - 1);
      std::vector<double> v(n);
      for (auto& e : v) e = 2.0 * rng.uniform() - 1.0;
      const Signal x(std::move(v));
      const Exponent p = ps[t % 5];
      if (volterra_norm(x, p) == 0.0) continue;
      const DualCertificate cert = dual_certificate(x, p);
      worst_gap =
          std::max(worst_gap, std::abs(cert.attained - volterra_norm(x, p)));
      worst_feas = std::max(
          worst_feas, std::max(0.0, p_norm(cert.g, p.conjugate()) - 1.0));
    }
    report("dual-attainment", worst_gap <= 1e-12, worst_gap);
    report("dual-feasibility", worst_feas <= 1e-12, worst_feas);
  }

  if (!ok) {
    std::fprintf(stderr, "verification failed\n");
    return kExitVerifyFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volterra norms and induced distances for sampled signals"};
  app.require_subcommand(1);

  // norm
  std::string norm_file, norm_p;
  bool norm_plain = false;
  std::size_t norm_column = 0;
  auto* norm_cmd = app.add_subcommand("norm", "Norm of one signal file");
  norm_cmd->add_option("file", norm_file, "signal file, one sample per line")
      ->required();
  norm_cmd->add_option("--p", norm_p, "exponent >= 1 or 'inf'")->required();
  norm_cmd->add_flag("--plain", norm_plain, "plain p-norm instead");
  norm_cmd->add_option("--column", norm_column, "read this CSV column (1-based)");

  // dist
  std::string dist_a, dist_b, dist_p;
  bool dist_plain = false, dist_emd = false, dist_km = false, dist_renorm = false;
  std::size_t dist_column = 0;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two signal files");
  dist_cmd->add_option("fileA", dist_a)->required();
  dist_cmd->add_option("fileB", dist_b)->required();
  auto* dist_p_opt = dist_cmd->add_option("--p", dist_p, "exponent >= 1 or 'inf'");
  auto* dist_emd_opt =
      dist_cmd->add_flag("--emd", dist_emd, "earth mover's distance (p=1 on densities)");
  auto* dist_km_opt =
      dist_cmd->add_flag("--km", dist_km, "Kolmogorov metric (p=inf on densities)");
  dist_cmd->add_flag("--plain", dist_plain, "plain p-norm distance instead");
  dist_cmd->add_flag("--renormalize", dist_renorm,
                     "scale inputs to unit mass before --emd/--km");
  dist_cmd->add_option("--column", dist_column, "read this CSV column (1-based)");
  dist_emd_opt->excludes(dist_p_opt)->excludes(dist_km_opt);
  dist_km_opt->excludes(dist_p_opt);

  // experiment
  std::string exp_kind, exp_config, exp_out, exp_manifest;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a sweep and write CSV");
  exp_cmd->add_option("kind", exp_kind, "noise | shift | radon")->required();
  exp_cmd->add_option("--config", exp_config, "JSON config file")->required();
  exp_cmd->add_option("--out", exp_out, "output CSV path")->required();
  exp_cmd->add_option("--manifest", exp_manifest, "also write a JSON run manifest");

  // verify
  std::size_t verify_n = 64, verify_trials = 1000;
  std::uint64_t verify_seed = 1;
  bool verify_corrupt = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check fast paths against the oracles");
  verify_cmd->add_option("--n", verify_n, "max signal length")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  verify_cmd->add_option("--trials", verify_trials, "random instances per check");
  verify_cmd->add_option("--seed", verify_seed, "stream seed");
  verify_cmd->add_flag("--self-test-corrupt", verify_corrupt)->group("");

  // grid
  std::string grid_kind, grid_out;
  std::size_t grid_m = 512;
  double grid_sigma = 0.001, grid_tol = 1.0;
  auto* grid_cmd = app.add_subcommand("grid", "Generate a 2-D grid CSV");
  grid_cmd->add_option("kind", grid_kind, "two-gaussian")->required();
  grid_cmd->add_option("--m", grid_m, "grid resolution");
  grid_cmd->add_option("--sigma", grid_sigma, "bump width parameter");
  grid_cmd->add_option("--out", grid_out, "output CSV path")->required();
  grid_cmd->add_option("--support-tolerance", grid_tol,
                       "allowed off-disc mass relative to the peak");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParseError;
  }

  try {
    if (norm_cmd->parsed()) {
      const Exponent p = parse_exponent(norm_p);
      const Signal x = read_signal(norm_file, norm_column);
      print_value(norm_plain ? p_norm(x, p) : volterra_norm(x, p));
      return 0;
    }

    if (dist_cmd->parsed()) {
      const Signal a = read_signal(dist_a, dist_column);
      const Signal b = read_signal(dist_b, dist_column);
      if (dist_emd || dist_km) {
        const Density P = dist_renorm ? Density::renormalized(a) : Density(a);
        const Density Q = dist_renorm ? Density::renormalized(b) : Density(b);
        print_value(dist_emd ? emd(P, Q) : km(P, Q));
        return 0;
      }
      if (dist_p.empty())
        throw SignalParseError("dist needs --p, --emd, or --km");
      const Exponent p = parse_exponent(dist_p);
      print_value(dist_plain ? p_norm(subtract(a, b), p)
                             : volterra_distance(a, b, p));
      return 0;
    }

    if (exp_cmd->parsed())
      return run_experiment(exp_kind, exp_config, exp_out, exp_manifest);

    if (verify_cmd->parsed())
      return run_verify(verify_n, verify_trials, verify_seed, verify_corrupt);

    if (grid_cmd->parsed()) {
      if (grid_kind != "two-gaussian") {
        std::fprintf(stderr, "unknown grid kind '%s'\n", grid_kind.c_str());
        return kExitParseError;
      }
      write_grid_csv(two_gaussian_grid(grid_m, grid_sigma, grid_tol), grid_out);
      return 0;
    }
  } catch (const ExponentOptionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadExponent;
  } catch (const LengthMismatchError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLengthMismatch;
  } catch (const DensityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDensityError;
  } catch (const SignalParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  }
  return 0;
}
