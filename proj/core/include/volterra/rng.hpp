#pragma once

#include <cstdint>

namespace volterra {

/// Counter-based deterministic random stream.
///
/// Draw i of stream s is a pure function mix(s, i): the same (seed, index)
/// pair yields the same value on every platform and thread layout. Streams
/// for independent work units are derived once up front, so parallel code
/// can hand each unit its own stream and stay bit-reproducible regardless
/// of scheduling.
class StreamRng {
public:
  explicit StreamRng(std::uint64_t stream) noexcept
      : stream_(stream), counter_(0), has_cached_(false), cached_(0.0) {}

  /// 64 uniform bits.
  std::uint64_t next_bits() noexcept;

  /// Uniform double in [0,1) with 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal via the polar method; the rejection loop consumes a
  /// variable number of uniforms, which is fine because draws only need to
  /// be deterministic within a stream, not aligned across streams.
  double gaussian() noexcept;

private:
  std::uint64_t stream_;
  std::uint64_t counter_;
  bool has_cached_;
  double cached_;
};

/// Derives the sub-stream key for one work unit of one experiment.
/// Chained so that distinct (seed, n, exponent index, trial) tuples map to
/// distinct streams.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t n,
                            std::uint64_t exponent_index,
                            std::uint64_t trial) noexcept;

}  // namespace volterra
