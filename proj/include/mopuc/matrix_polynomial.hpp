#pragma once

#include "mopuc/types.hpp"

#include <vector>

namespace mopuc {

/// Polynomial with square complex matrix coefficients, P(z) = sum a_k z^k.
/// Degree is coeffs().size() - 1; a zero trailing coefficient is kept as-is,
/// since reversal and the recursions depend on the nominal degree.
class MatrixPolynomial {
 public:
  MatrixPolynomial(Index dim, std::vector<Matrix> coeffs);

  static MatrixPolynomial constant(const Matrix& a);
  static MatrixPolynomial identity(Index dim);
  /// z^degree * I.
  static MatrixPolynomial monomial(Index dim, int degree);

  Index dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Matrix& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  Matrix operator()(Complex z) const;

  /// Reversal at the nominal degree n: coefficient k of the result is
  /// adjoint(a_{n-k}). An involution; (c * P) reversed is (P reversed) * c^H.
  MatrixPolynomial reversed() const;

  MatrixPolynomial times_z() const;

  /// Exact division by z. The constant coefficient must vanish within
  /// rel_tol * max coefficient norm; otherwise throws NumericalError with the
  /// remainder size.
  MatrixPolynomial divided_by_z(double rel_tol = 1e-8) const;

  MatrixPolynomial right_multiplied(const Matrix& c) const;
  MatrixPolynomial left_multiplied(const Matrix& c) const;

  MatrixPolynomial operator+(const MatrixPolynomial& other) const;
  MatrixPolynomial operator-(const MatrixPolynomial& other) const;

  double max_coeff_norm() const;

 private:
  Index dim_;
  std::vector<Matrix> coeffs_;
};

/// Maximum Frobenius distance between coefficients, padding with zeros when
/// degrees differ.
double max_coeff_distance(const MatrixPolynomial& p, const MatrixPolynomial& q);

}  // namespace mopuc
