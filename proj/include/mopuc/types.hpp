#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace mopuc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Which of the two matrix inner products / Toeplitz orderings is meant.
enum class Side { Right, Left };

inline const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

/// Inputs with inconsistent shapes, orders, or options.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that cannot proceed: singular system, indefinite matrix,
/// non-contractive reflection coefficient, divergent integral.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold for valid inputs failed a check.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline Matrix symmetrized(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

inline bool is_hermitian(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = max_abs(a);
  if (scale == 0.0) return true;
  return max_abs(a - a.adjoint().eval()) <= rel_tol * scale;
}

inline double frobenius(const Matrix& a) { return a.norm(); }

inline double rel_frobenius_diff(const Matrix& a, const Matrix& b) {
  const double scale = std::max(a.norm(), b.norm());
  return scale == 0.0 ? (a - b).norm() : (a - b).norm() / scale;
}

}  // namespace mopuc
