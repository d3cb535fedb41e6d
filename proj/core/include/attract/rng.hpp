#pragma once

#include <cstdint>
#include <random>

#include "attract/point.hpp"

namespace attract {

/// Seeded random source with a fixed bit-to-double mapping, so a given seed
/// yields the same stream on every platform. std::uniform_real_distribution
/// is deliberately avoided: its output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) using the top 53 bits of the engine output.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace attract
