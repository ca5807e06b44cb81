#include "volterra/radon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace volterra {

Grid2D::Grid2D(std::size_t m, std::vector<double> values,
               double support_tolerance)
    : m_(m), tol_(support_tolerance), values_(std::move(values)) {
  if (m_ < 2) throw std::invalid_argument("grid needs m >= 2");
  if (values_.size() != m_ * m_)
    throw std::invalid_argument("grid needs m*m values");
  double peak = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid values must be finite");
    peak = std::max(peak, std::abs(v));
  }
  if (peak == 0.0) return;
  double outside = 0.0;
  for (std::size_t iy = 0; iy < m_; ++iy) {
    const double cy = coord(iy);
    for (std::size_t ix = 0; ix < m_; ++ix) {
      const double cx = coord(ix);
      if (cx * cx + cy * cy > 0.25)
        outside = std::max(outside, std::abs(at(ix, iy)));
    }
  }
  if (outside > tol_ * peak)
    throw std::invalid_argument(
        "grid carries mass outside the inscribed disc beyond tolerance");
}

double Grid2D::interpolate(double x, double y) const noexcept {
  const double md = static_cast<double>(m_);
  // Continuous cell-center coordinates.
  const double gx = (x + 0.5) * md - 0.5;
  const double gy = (y + 0.5) * md - 0.5;
  const double fx0 = std::floor(gx);
  const double fy0 = std::floor(gy);
  const double tx = gx - fx0;
  const double ty = gy - fy0;
  const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(fx0);
  const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(fy0);

  const auto val = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(m_) ||
        j >= static_cast<std::ptrdiff_t>(m_))
      return 0.0;
    return values_[static_cast<std::size_t>(j) * m_ + static_cast<std::size_t>(i)];
  };

  return (1.0 - tx) * (1.0 - ty) * val(ix, iy) + tx * (1.0 - ty) * val(ix + 1, iy) +
         (1.0 - tx) * ty * val(ix, iy + 1) + tx * ty * val(ix + 1, iy + 1);
}

double Grid2D::mass() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / (static_cast<double>(m_) * static_cast<double>(m_));
}

double grid_p_norm(const Grid2D& F, Exponent p) {
  const std::size_t m = F.m();
  double peak = 0.0;
  for (std::size_t iy = 0; iy < m; ++iy) {
    const double cy = F.coord(iy);
    for (std::size_t ix = 0; ix < m; ++ix) {
      const double cx = F.coord(ix);
      if (cx * cx + cy * cy > 0.25) continue;
      peak = std::max(peak, std::abs(F.at(ix, iy)));
    }
  }
  if (p.is_infinite() || peak == 0.0) return peak;

  const double pe = p.value();
  double s = 0.0;
  for (std::size_t iy = 0; iy < m; ++iy) {
    const double cy = F.coord(iy);
    for (std::size_t ix = 0; ix < m; ++ix) {
      const double cx = F.coord(ix);
      if (cx * cx + cy * cy > 0.25) continue;
      const double t = std::abs(F.at(ix, iy)) / peak;
      if (pe == 1.0)
        s += t;
      else if (pe == 2.0)
        s += t * t;
      else
        s += std::pow(t, pe);
    }
  }
  const double cells = static_cast<double>(m) * static_cast<double>(m);
  return peak * std::pow(s / cells, 1.0 / pe);
}

namespace {

// Whole-turn reduction. Exact for the subtractions involved whenever the
// result stays well above the rounding floor of 2*pi, which is all the
// precision the projection itself can use.
double reduce_turns(double theta) {
  constexpr double turn = 2.0 * std::numbers::pi;
  while (theta >= turn) theta -= turn;
  while (theta < 0.0) theta += turn;
  return theta;
}

}  // namespace

Signal project(const Grid2D& F, double theta, std::size_t n,
               std::size_t quadrature_nodes) {
  if (n < 2) throw std::invalid_argument("projection needs n >= 2");
  const std::size_t q = quadrature_nodes == 0 ? F.m() : quadrature_nodes;
  if (q < 2) throw std::invalid_argument("projection needs >= 2 quadrature nodes");

  const double th = reduce_turns(theta);
  const double c = std::cos(th);
  const double s = std::sin(th);

  const double h = 1.0 / static_cast<double>(q - 1);
  std::vector<double> node(q), weight(q);
  for (std::size_t i = 0; i < q; ++i) {
    node[i] = -0.5 + static_cast<double>(i) * h;
    weight[i] = (i == 0 || i == q - 1) ? 0.5 * h : h;
  }

  std::vector<double> out(n);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k + 1) / nd - 0.5;
    double acc = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      const double y = node[i];
      acc += weight[i] * F.interpolate(c * x + s * y, c * y - s * x);
    }
    out[k] = acc;
  }
  return Signal(std::move(out));
}

ProjectionBound projection_bound(double theta, double phi, double Fp_norm) {
  const double d = std::abs(theta - phi);
  // Half-angle form of sqrt((1 - cos d) / 2); immune to the cancellation
  // in 1 - cos for small d.
  const double value = Fp_norm * std::abs(std::sin(0.5 * d));
  const bool certified = d <= 0.25 * std::numbers::pi + 1e-12;
  return {value, certified};
}

Grid2D two_gaussian_grid(std::size_t m, double sigma, double support_tolerance) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  std::vector<double> v(m * m);
  const double md = static_cast<double>(m);
  for (std::size_t iy = 0; iy < m; ++iy) {
    const double y = -0.5 + (static_cast<double>(iy) + 0.5) / md;
    const double da = y - 0.5, db = y + 0.5;
    for (std::size_t ix = 0; ix < m; ++ix) {
      const double x = -0.5 + (static_cast<double>(ix) + 0.5) / md;
      v[iy * m + ix] = std::exp(-(x * x + da * da) / sigma) +
                       std::exp(-(x * x + db * db) / sigma);
    }
  }
  return Grid2D(m, std::move(v), support_tolerance);
}

}  // namespace volterra
