#pragma once

// Seeded generator whose output does not depend on the standard library
// implementation, so reports are reproducible across toolchains.

#include <cmath>
#include <cstdint>
#include <random>

namespace lpm {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on {lo, ..., hi}.
  int integer(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double normal() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lpm
