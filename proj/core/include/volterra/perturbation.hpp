#pragma once

#include "volterra/signal.hpp"

#include <cstddef>
#include <functional>

namespace volterra {

/// Translates a signal by a whole number of grid steps, zero-filling the
/// vacated entries: out_k = x_{k - steps} where defined. Entries carrying
/// nonzero mass may not fall off either end; that throws std::domain_error
/// since the translate is no longer a shift of the same function.
Signal shift(const Signal& x, std::ptrdiff_t steps);

/// Change of variables on a subinterval [a,b] of [0,1]: a strictly
/// increasing map psi with psi([a,b]) inside [0,1], plus a weight rho
/// applied after composition. Models f(x) -> rho(x) * f(psi^{-1}(x)).
class Warp {
public:
  /// `psi_inverse` may be empty; apply_warp then inverts psi by bisection
  /// to 1e-12. Likewise `psi_prime`; without it slopes come from a centered
  /// difference, which costs ~1e-11 of accuracy in epsilon_of. Monotonicity
  /// and range of psi are checked on a sample grid at construction
  /// (std::invalid_argument on failure).
  Warp(std::function<double(double)> psi, std::function<double(double)> rho,
       double a, double b,
       std::function<double(double)> psi_inverse = {},
       std::function<double(double)> psi_prime = {},
       std::size_t check_points = 1024);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double psi(double x) const { return psi_(x); }
  double rho(double x) const { return rho_(x); }

  /// psi(a) and psi(b), the image interval.
  double image_lo() const noexcept { return image_lo_; }
  double image_hi() const noexcept { return image_hi_; }

  /// Inverse of psi on the image; closed form when supplied, bisection
  /// otherwise.
  double psi_inverse(double y) const;

  /// Slope of psi at x: analytic when supplied, otherwise a centered
  /// difference clamped to [a,b].
  double psi_slope(double x) const;

private:
  std::function<double(double)> psi_;
  std::function<double(double)> rho_;
  std::function<double(double)> inverse_;
  std::function<double(double)> prime_;
  double a_, b_;
  double image_lo_, image_hi_;
};

/// Samples the warped signal rho(x) * f(psi^{-1}(x)) at the n grid
/// positions; positions outside the image of [a,b] give 0.
Signal apply_warp(const std::function<double(double)>& f, const Warp& w,
                  std::size_t n);

/// Size of the perturbation the warp induces:
///   max |x - psi(x)|  +  max |1 - rho(psi(x)) * psi'(x)|
/// over a uniform grid of `grid_points` samples of [a,b] (endpoints
/// included). The Volterra distance between f and its warp is bounded by
/// this value times the plain p-norm of f.
double epsilon_of(const Warp& w, std::size_t grid_points = 10000);

}  // namespace volterra
