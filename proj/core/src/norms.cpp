#include "volterra/norms.hpp"

#include <cmath>
#include <cstddef>

namespace volterra {

Signal cumulative(const Signal& x) {
  const std::size_t n = x.size();
  const double nd = static_cast<double>(n);
  std::vector<double> out(n);
  double run = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    run += x[k];
    out[k] = run / nd;
  }
  return Signal(std::move(out));
}

double p_norm(const Signal& x, Exponent p) {
  const std::size_t n = x.size();
  if (n == 0) return 0.0;
  double peak = 0.0;
  for (std::size_t k = 0; k < n; ++k) peak = std::max(peak, std::abs(x[k]));
  if (p.is_infinite() || peak == 0.0) return peak;

  const double pe = p.value();
  double s = 0.0;
  if (pe == 1.0) {
    for (std::size_t k = 0; k < n; ++k) s += std::abs(x[k]) / peak;
  } else if (pe == 2.0) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = std::abs(x[k]) / peak;
      s += t * t;
    }
  } else {
    for (std::size_t k = 0; k < n; ++k)
      s += std::pow(std::abs(x[k]) / peak, pe);
  }
  return peak * std::pow(s / static_cast<double>(n), 1.0 / pe);
}

double inner(const Signal& x, const Signal& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s / static_cast<double>(x.size());
}

double volterra_norm(const Signal& x, Exponent p) {
  return p_norm(cumulative(x), p);
}

double volterra_distance(const Signal& x, const Signal& y, Exponent p) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  return p_norm(subtract(cumulative(x), cumulative(y)), p);
}

double emd(const Density& P, const Density& Q) {
  return volterra_distance(P.signal(), Q.signal(), Exponent::finite(1.0));
}

double km(const Density& P, const Density& Q) {
  return volterra_distance(P.signal(), Q.signal(), Exponent::infinity());
}

namespace {

double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

DualCertificate dual_certificate(const Signal& x, Exponent p) {
  const Signal u = cumulative(x);
  const double norm = p_norm(u, p);
  if (norm == 0.0)
    throw std::domain_error("dual certificate needs a nonzero Volterra norm");

  const std::size_t n = u.size();
  std::vector<double> g(n, 0.0);
  if (p.is_infinite()) {
    std::size_t peak = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(u[k]) > std::abs(u[peak])) peak = k;
    g[peak] = static_cast<double>(n) * sign(u[peak]);
  } else if (p.value() == 1.0) {
    for (std::size_t k = 0; k < n; ++k) g[k] = sign(u[k]);
  } else {
    const double pe = p.value();
    for (std::size_t k = 0; k < n; ++k) {
      const double t = std::abs(u[k]) / norm;
      const double mag = (pe == 2.0) ? t : std::pow(t, pe - 1.0);
      g[k] = sign(u[k]) * mag;
    }
  }

  Signal gs{std::move(g)};
  const double attained = inner(u, gs);
  return DualCertificate{std::move(gs), attained};
}

}  // namespace volterra
