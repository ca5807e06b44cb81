#include "volterra/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volterra {

Signal shift(const Signal& x, std::ptrdiff_t steps) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const std::ptrdiff_t dst = j + steps;
    if ((dst < 0 || dst >= n) && x[static_cast<std::size_t>(j)] != 0.0)
      throw std::domain_error("shift clips nonzero mass at the boundary");
  }
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const std::ptrdiff_t src = k - steps;
    if (src >= 0 && src < n)
      out[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(src)];
  }
  return Signal(std::move(out));
}

Warp::Warp(std::function<double(double)> psi, std::function<double(double)> rho,
           double a, double b, std::function<double(double)> psi_inverse,
           std::function<double(double)> psi_prime, std::size_t check_points)
    : psi_(std::move(psi)),
      rho_(std::move(rho)),
      inverse_(std::move(psi_inverse)),
      prime_(std::move(psi_prime)),
      a_(a),
      b_(b) {
  if (!(a >= 0.0 && b <= 1.0 && a < b))
    throw std::invalid_argument("warp interval must satisfy 0 <= a < b <= 1");
  if (!psi_ || !rho_) throw std::invalid_argument("warp needs psi and rho");

  const std::size_t m = std::max<std::size_t>(check_points, 2);
  double prev = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = a_ + (b_ - a_) * static_cast<double>(i) /
                              static_cast<double>(m - 1);
    const double y = psi_(x);
    if (!std::isfinite(y) || y < -1e-12 || y > 1.0 + 1e-12)
      throw std::invalid_argument("psi must map [a,b] into [0,1]");
    if (i > 0 && y <= prev)
      throw std::invalid_argument("psi must be strictly increasing on [a,b]");
    prev = y;
  }
  image_lo_ = psi_(a_);
  image_hi_ = psi_(b_);
}

double Warp::psi_inverse(double y) const {
  if (inverse_) return inverse_(y);
  double lo = a_, hi = b_;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (psi_(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double Warp::psi_slope(double x) const {
  if (prime_) return prime_(x);
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  const double lo = std::max(a_, x - h);
  const double hi = std::min(b_, x + h);
  return (psi_(hi) - psi_(lo)) / (hi - lo);
}

Signal apply_warp(const std::function<double(double)>& f, const Warp& w,
                  std::size_t n) {
  std::vector<double> out(n, 0.0);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k + 1) / nd;
    if (x < w.image_lo() || x > w.image_hi()) continue;
    const double t = std::clamp(w.psi_inverse(x), w.a(), w.b());
    out[k] = w.rho(x) * f(t);
  }
  return Signal(std::move(out));
}

double epsilon_of(const Warp& w, std::size_t grid_points) {
  const std::size_t m = std::max<std::size_t>(grid_points, 2);
  double drift = 0.0, stretch = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = w.a() + (w.b() - w.a()) * static_cast<double>(i) /
                                  static_cast<double>(m - 1);
    const double y = w.psi(x);
    drift = std::max(drift, std::abs(x - y));
    stretch = std::max(stretch, std::abs(1.0 - w.rho(y) * w.psi_slope(x)));
  }
  return drift + stretch;
}

}  // namespace volterra
