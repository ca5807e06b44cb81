#pragma once

#include "volterra/radon.hpp"
#include "volterra/signal.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace volterra {

/// One output record of a sweep. `family` is "volterra" for the Volterra
/// norm or distance and "plain" for the ordinary p-norm counterpart.
struct SweepRow {
  double parameter;
  Exponent p = Exponent::finite(1.0);
  double value;
  std::string family;
  std::size_t n;
  std::size_t trials;
  std::uint64_t seed;
};

/// Writes rows as CSV with the fixed header
/// parameter,p,value,family,n,trials,seed. Doubles are printed in the
/// shortest form that round-trips, so equal runs give byte-equal files.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_csv(const std::string& path, const std::vector<SweepRow>& rows);

/// Monte-Carlo study of how noise perturbs the Volterra norm of a sampled
/// signal: for each n and p, the mean over trials of
///   |‖x_n + z‖_p^V - ref_p| / ref_p
/// where z has i.i.d. centered Gaussian entries of the given variance and
/// ref_p is the Volterra norm of f sampled at ref_oversample * max(n).
///
/// Trials use the counter-based stream (seed, n, p index, trial), so every
/// value is independent of thread scheduling; results are aggregated in
/// trial order.
struct NoiseConfig {
  std::function<double(double)> f;
  std::vector<std::size_t> n_values;  // strictly increasing
  std::vector<Exponent> p_values;
  std::size_t trials = 100;
  double variance = 1.0;
  std::uint64_t seed = 0;
  std::size_t ref_oversample = 16;
};
std::vector<SweepRow> noise_error(const NoiseConfig& cfg);

/// Volterra p-norms of pure noise z with independent entries
/// z_j ~ N(0, sigmas[j]^2); used to check the sqrt(2*pi/n) * sigma-bar
/// mean bound and the Gaussian tail.
struct NoiseNormStats {
  double mean;
  double std_error;
  std::vector<double> norms;  // one per trial, in trial order
};
NoiseNormStats pure_noise_norm(const std::vector<double>& sigmas, Exponent p,
                               std::size_t trials, std::uint64_t seed);

/// Relative shift response of a sampled signal: for each eps, the signal
/// is translated by round(eps * n) grid steps and the row value is
/// distance(x, shifted) / norm(x) in the matching family, for every p.
struct ShiftConfig {
  std::function<double(double)> f;
  std::size_t n = 1000;
  std::vector<double> eps_values;
  std::vector<Exponent> p_values;
  std::uint64_t seed = 0;  // recorded in rows; the sweep itself is exact
};
std::vector<SweepRow> shift_sweep(const ShiftConfig& cfg);

/// Distance between projections of F at angle theta and at angle 0, per p,
/// in both families. Values are raw distances (not normalized).
struct RadonConfig {
  std::size_t n = 256;
  std::vector<double> theta_values;
  std::vector<Exponent> p_values;
  std::size_t quadrature_nodes = 0;  // 0: use m
  std::uint64_t seed = 0;
};
std::vector<SweepRow> projection_sweep(const Grid2D& F, const RadonConfig& cfg);

/// Number of worker threads experiments may use: the VOLTERRA_THREADS
/// environment variable when set (minimum 1), otherwise
/// hardware_concurrency. Thread count never changes results, only speed.
std::size_t worker_count();

}  // namespace volterra
