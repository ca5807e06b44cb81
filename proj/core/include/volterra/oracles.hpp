#pragma once

#include "volterra/signal.hpp"

#include <cstddef>
#include <vector>

namespace volterra {

/// One transport move: `mass` shipped from source atom i to target atom j
/// (0-based storage indices; atom k sits at position (k+1)/n and carries
/// mass value/n).
struct TransportMove {
  std::size_t from;
  std::size_t to;
  double mass;
};

struct TransportResult {
  double cost;
  std::vector<TransportMove> plan;
};

/// Optimal 1-D transport between two densities on the shared grid, by the
/// greedy two-pointer sweep. In one dimension the sweep is optimal for any
/// convex cost of |position difference|, so the cost here is the earth
/// mover's distance. The returned plan moves nonzero mass only and is
/// feasible within accumulation error.
TransportResult transport_emd(const Density& P, const Density& Q);

/// Largest absolute gap between the running means of P and Q, accumulated
/// left to right. Independent check of the Kolmogorov metric.
double cdf_max(const Density& P, const Density& Q);

/// Volterra norm of f sampled at each listed resolution.
/// `levels` must be strictly increasing; one norm value per level.
std::vector<double> refine_norm(const std::function<double(double)>& f,
                                Exponent p, const std::vector<std::size_t>& levels);

}  // namespace volterra
