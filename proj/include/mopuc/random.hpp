#pragma once

#include "mopuc/types.hpp"

#include <cmath>
#include <random>

namespace mopuc {

/// Seeded random source producing identical streams on every platform.
/// std::mt19937_64 output is fully specified by the standard; the uniform and
/// Gaussian transformations below avoid std::*_distribution, whose streams
/// are implementation defined.
class DeterministicRng {
 public:
  explicit DeterministicRng(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  /// Complex with independent N(0, 1/2) real and imaginary parts.
  Complex complex_gaussian() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return Complex(gaussian() * inv_sqrt2, gaussian() * inv_sqrt2);
  }

  Matrix gaussian_matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    }
    return m;
  }

  /// Point on the unit circle.
  Complex unit_circle() {
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double t = two_pi * uniform();
    return Complex(std::cos(t), std::sin(t));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mopuc
