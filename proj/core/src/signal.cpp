#include "volterra/signal.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace volterra {

LengthMismatchError::LengthMismatchError(std::size_t a, std::size_t b)
    : std::invalid_argument("signal lengths differ: " + std::to_string(a) +
                            " vs " + std::to_string(b)) {}

Signal::Signal(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v))
      throw std::invalid_argument("signal entries must be finite");
  }
}

Signal Signal::sample(const std::function<double(double)>& f, std::size_t n) {
  std::vector<double> v(n);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    v[k] = f(static_cast<double>(k + 1) / nd);
  return Signal(std::move(v));
}

namespace {

void require_same_length(const Signal& x, const Signal& y) {
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
}

}  // namespace

Signal add(const Signal& x, const Signal& y) {
  require_same_length(x, y);
  std::vector<double> v(x.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x[k] + y[k];
  return Signal(std::move(v));
}

Signal subtract(const Signal& x, const Signal& y) {
  require_same_length(x, y);
  std::vector<double> v(x.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x[k] - y[k];
  return Signal(std::move(v));
}

Signal scale(const Signal& x, double c) {
  std::vector<double> v(x.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * x[k];
  return Signal(std::move(v));
}

Exponent Exponent::finite(double p) {
  if (!std::isfinite(p) || p < 1.0)
    throw std::invalid_argument("exponent must be a real >= 1 or infinity");
  return Exponent(false, p);
}

Exponent Exponent::infinity() noexcept {
  return Exponent(true, std::numeric_limits<double>::infinity());
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf") return infinity();
  double p = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("cannot parse exponent: '" + text + "'");
  return finite(p);
}

double Exponent::value() const {
  if (infinite_) throw std::logic_error("infinite exponent has no value");
  return p_;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return finite(1.0);
  if (p_ == 1.0) return infinity();
  return finite(p_ / (p_ - 1.0));
}

std::string Exponent::label() const {
  if (infinite_) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p_);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

// Compensated sum, so the mass check stays sharp at any length. The norm
// code deliberately keeps plain left-to-right accumulation; this is only
// about validating inputs.
double checked_mass(const Signal& x) {
  double sum = 0.0, carry = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0.0) throw DensityError("density entries must be >= 0");
    const double t = sum + x[k];
    if (std::abs(sum) >= std::abs(x[k]))
      carry += (sum - t) + x[k];
    else
      carry += (x[k] - t) + sum;
    sum = t;
  }
  return (sum + carry) / static_cast<double>(x.size());
}

}  // namespace

Density::Density(Signal x, double tolerance) : signal_(std::move(x)) {
  if (signal_.empty()) throw DensityError("density must be nonempty");
  const double mass = checked_mass(signal_);
  if (std::abs(mass - 1.0) > tolerance)
    throw DensityError("density mass is " + std::to_string(mass) +
                       ", expected 1 within tolerance");
}

Density Density::renormalized(Signal x, double tolerance) {
  if (x.empty()) throw DensityError("density must be nonempty");
  const double mass = checked_mass(x);
  if (!(mass > 0.0)) throw DensityError("cannot renormalize zero mass");
  return Density(scale(x, 1.0 / mass), tolerance);
}

}  // namespace volterra
