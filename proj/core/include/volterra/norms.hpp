#pragma once

#include "volterra/signal.hpp"

namespace volterra {

/// Running mean of the prefix: out_k = (1/n) * sum_{j<=k} x_j.
/// Accumulates left to right; entry k stores the scaled prefix sum.
Signal cumulative(const Signal& x);

/// Normalized p-norm: ((1/n) sum |x_k|^p)^(1/p), or max |x_k| for p = inf.
/// Computed in factored form, peak * ((1/n) sum (|x_k|/peak)^p)^(1/p),
/// so large p does not overflow.
double p_norm(const Signal& x, Exponent p);

/// (1/n) * sum x_k * y_k.
double inner(const Signal& x, const Signal& y);

/// p-norm of the running mean: p_norm(cumulative(x), p).
double volterra_norm(const Signal& x, Exponent p);

/// Norm of the difference of running means. Equals
/// volterra_norm(subtract(x, y), p) up to rounding; computed as the p-norm
/// of cumulative(x) - cumulative(y) so each entry is the difference of two
/// scaled prefix sums.
double volterra_distance(const Signal& x, const Signal& y, Exponent p);

/// Earth mover's distance between densities: volterra_distance at p = 1.
double emd(const Density& P, const Density& Q);

/// Kolmogorov metric between densities: volterra_distance at p = inf,
/// i.e. the largest gap between the running means.
double km(const Density& P, const Density& Q);

/// Witness for the variational form of the Volterra norm: a signal g with
/// conjugate-norm at most 1 whose pairing (1/n) sum u_k g_k against
/// u = cumulative(x) attains p_norm(u, p).
struct DualCertificate {
  Signal g;
  double attained;
};

/// Builds the maximizing g for a signal with nonzero Volterra norm.
/// Finite p: g_k = sign(u_k) (|u_k|/N)^(p-1) with N = p_norm(u, p).
/// p = 1: g_k = sign(u_k). p = inf: n * sign(u_k*) at one peak entry k*.
/// Throws std::domain_error when the Volterra norm is zero.
DualCertificate dual_certificate(const Signal& x, Exponent p);

}  // namespace volterra
