#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "soliton_lab/jet.hpp"

namespace testing_support {

using soliton_lab::CNum;

inline constexpr double kPi = std::numbers::pi;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }
  /// Uniform in the annulus r0 <= |z| <= r1, angle within (-pi + gap, pi - gap).
  CNum annulus(double r0, double r1, double gap = 0.1) {
    return std::polar(uniform(r0, r1), uniform(-kPi + gap, kPi - gap));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing_support
