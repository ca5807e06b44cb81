#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace volterra {

/// Thrown when two signals that must live on the same grid have
/// different lengths.
class LengthMismatchError : public std::invalid_argument {
public:
  LengthMismatchError(std::size_t a, std::size_t b);
};

/// Thrown when a signal fails the density requirements: nonnegative
/// entries and unit discrete integral.
class DensityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// n uniform samples of a real-valued function on [0,1].
///
/// Entry k (0-based) holds the sample at (k+1)/n; there is no sample at 0.
/// All entries are finite.
class Signal {
public:
  Signal() = default;
  explicit Signal(std::vector<double> values);

  /// Samples f at (k+1)/n for k = 0..n-1.
  static Signal sample(const std::function<double(double)>& f, std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double operator[](std::size_t k) const noexcept { return values_[k]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Position in [0,1] of entry k, i.e. (k+1)/n.
  double position(std::size_t k) const noexcept {
    return static_cast<double>(k + 1) / static_cast<double>(values_.size());
  }

  friend bool operator==(const Signal&, const Signal&) = default;

private:
  std::vector<double> values_;
};

Signal add(const Signal& x, const Signal& y);
Signal subtract(const Signal& x, const Signal& y);
Signal scale(const Signal& x, double c);

/// Norm exponent: a real p >= 1 or infinity.
class Exponent {
public:
  static Exponent finite(double p);
  static Exponent infinity() noexcept;

  /// Accepts a decimal real >= 1 or the literal "inf".
  static Exponent parse(const std::string& text);

  bool is_infinite() const noexcept { return infinite_; }

  /// Finite value; only valid when !is_infinite().
  double value() const;

  /// Holder conjugate: 1 <-> inf, otherwise p/(p-1).
  Exponent conjugate() const;

  /// "1", "2.5", "inf"; round-trips through parse().
  std::string label() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

private:
  Exponent(bool infinite, double p) : infinite_(infinite), p_(p) {}
  bool infinite_ = false;
  double p_ = 1.0;
};

/// A signal with nonnegative entries whose discrete integral (1/n)*sum
/// equals 1 within tolerance. Wraps the validated signal.
class Density {
public:
  explicit Density(Signal x, double tolerance = 1e-12);

  /// Scales a nonnegative signal with positive mass to unit discrete
  /// integral, then validates.
  static Density renormalized(Signal x, double tolerance = 1e-12);

  const Signal& signal() const noexcept { return signal_; }
  std::size_t size() const noexcept { return signal_.size(); }
  double operator[](std::size_t k) const noexcept { return signal_[k]; }

private:
  Signal signal_;
};

}  // namespace volterra
