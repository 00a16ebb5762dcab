#pragma once

#include <cstdint>
#include <random>

namespace toda {

/// Seeded generator with portable uniform draws.
///
/// std::uniform_real_distribution is implementation-defined, so reports that
/// must be byte-identical across toolchains derive doubles directly from the
/// mt19937_64 stream instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t raw() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toda
