#include "volterra/rng.hpp"

#include <cmath>

namespace volterra {

namespace {

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t StreamRng::next_bits() noexcept {
  return mix(stream_ ^ mix(counter_++));
}

double StreamRng::uniform() noexcept {
  return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double StreamRng::gaussian() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double r = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * r;
    has_cached_ = true;
    return u * r;
  }
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t n,
                            std::uint64_t exponent_index,
                            std::uint64_t trial) noexcept {
  std::uint64_t k = mix(seed);
  k = mix(k ^ n);
  k = mix(k ^ exponent_index);
  k = mix(k ^ trial);
  return k;
}

}  // namespace volterra
