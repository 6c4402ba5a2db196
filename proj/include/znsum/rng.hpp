#pragma once

#include <cstdint>

namespace znsum {

/**
 * Counter-based deterministic generator: the i-th value of a stream is a pure
 * function of (seed, stream, i), so draws are reproducible regardless of
 * scheduling or worker count.
 */
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ull))) {}

  std::uint64_t next() { return mix(base_ + golden * ++counter_); }

  /// Uniform-ish value in [0, bound); bound > 0. Modulo bias is irrelevant at
  /// the bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z += golden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace znsum
