// Seeded random source with a platform-independent output stream.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so the conversions to doubles and integers are done
// here.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace schwarzlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Standard exponential variate.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace schwarzlab
