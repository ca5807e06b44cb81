#pragma once

#include "volterra/signal.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace volterra {

/// m x m samples of a function on the square [-1/2,1/2]^2, taken at cell
/// centers (-1/2 + (i+1/2)/m in each axis, 0-based i). Values of
/// appreciable size are expected to lie inside the inscribed disc; the
/// constructor rejects grids whose mass outside the disc exceeds
/// support_tolerance relative to the peak.
class Grid2D {
public:
  Grid2D(std::size_t m, std::vector<double> values,
         double support_tolerance = 1e-8);

  std::size_t m() const noexcept { return m_; }
  double support_tolerance() const noexcept { return tol_; }

  /// Sample at column ix (x-axis) and row iy (y-axis), both 0-based from
  /// the lower-left corner.
  double at(std::size_t ix, std::size_t iy) const noexcept {
    return values_[iy * m_ + ix];
  }

  const std::vector<double>& values() const noexcept { return values_; }

  /// Cell-center coordinate of index i on either axis.
  double coord(std::size_t i) const noexcept {
    return -0.5 + (static_cast<double>(i) + 0.5) / static_cast<double>(m_);
  }

  /// Zero-padded bilinear interpolation at (x, y).
  double interpolate(double x, double y) const noexcept;

  /// Mean of the values over the whole square, i.e. the quadrature mass
  /// (1/m^2) * sum.
  double mass() const noexcept;

private:
  std::size_t m_;
  double tol_;
  std::vector<double> values_;
};

/// Normalized p-norm of the grid restricted to cells whose centers lie in
/// the closed inscribed disc, with quadrature weight 1/m^2 per cell.
double grid_p_norm(const Grid2D& F, Exponent p);

/// Parallel-beam projection of F onto the axis at angle theta:
///   f_theta(x) = integral of F(cos t * x + sin t * y, cos t * y - sin t * x) dy
/// over y in [-1/2,1/2], evaluated at x = (k+1)/n - 1/2, k = 0..n-1, by the
/// trapezoid rule on `quadrature_nodes` nodes (0 means use m). The angle is
/// reduced by whole turns first, so theta and theta + 2*pi project
/// identically.
Signal project(const Grid2D& F, double theta, std::size_t n,
               std::size_t quadrature_nodes = 0);

/// Upper bound on the Volterra p-distance between projections at two
/// angles: Fp_norm * sqrt((1 - cos(theta - phi)) / 2). The bound is proved
/// for |theta - phi| <= pi/4; outside that range the value is still
/// returned with certified = false.
struct ProjectionBound {
  double value;
  bool certified;
};
ProjectionBound projection_bound(double theta, double phi, double Fp_norm);

/// Two sharp Gaussian bumps at (0, +-1/2), the classic example of nearby
/// projections with far-apart plain distance:
///   F(w) = exp(-|w - (0,1/2)|^2 / sigma) + exp(-|w + (0,1/2)|^2 / sigma).
/// The bumps straddle the disc boundary, so cells just outside the disc
/// carry near-peak values; the default tolerance of 1 makes the support
/// check vacuous for this grid on purpose.
Grid2D two_gaussian_grid(std::size_t m, double sigma,
                         double support_tolerance = 1.0);

/// CSV with m rows of m comma-separated values; the first row is the top
/// of the grid (largest y). A JSON sidecar next to the CSV (extension
/// swapped to .json) records m and the support tolerance.
void write_grid_csv(const Grid2D& F, const std::string& path);
Grid2D read_grid_csv(const std::string& path);

}  // namespace volterra
