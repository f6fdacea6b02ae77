#pragma once

#include "mopuc/types.hpp"

namespace mopuc {

/// Relative tolerance for accepting a matrix as Hermitian (scaled by max |entry|).
inline constexpr double kHermitianRelTol = 1e-12;
/// A Hermitian matrix counts as positive definite when
/// lambda_min > kPositiveRelTol * lambda_max.
inline constexpr double kPositiveRelTol = 1e-12;

/// A Hermitian positive definite matrix with its eigendecomposition cached.
///
/// Construction symmetrizes the input as (A + A^H)/2 after checking that the
/// asymmetry is below kHermitianRelTol, then eigendecomposes and rejects any
/// spectrum that is not strictly positive. All derived quantities (square
/// root, inverse, log-determinant) reuse the cached decomposition.
class HermitianPd {
 public:
  explicit HermitianPd(const Matrix& a);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  /// Eigenvalues in ascending order.
  const RealVector& eigenvalues() const { return evals_; }
  /// Unitary matrix of eigenvectors, columns matching eigenvalues().
  const Matrix& eigenvectors() const { return evecs_; }

  Matrix sqrt() const;
  Matrix inv_sqrt() const;
  Matrix inverse() const;
  double log_det() const;
  double condition() const;

 private:
  Matrix mat_;
  RealVector evals_;
  Matrix evecs_;
};

/// Unique positive definite square root: S with S*S == A.
HermitianPd hermitian_sqrt(const HermitianPd& a);

/// Inverse square root: S with S*A*S == I.
HermitianPd hermitian_inv_sqrt(const HermitianPd& a);

/// Schur complement of the leading split x split block A in the Hermitian
/// matrix M = [[A, B], [B^H, C]]: returns C - B^H A^{-1} B.
Matrix schur_complement(const Matrix& m, Index split);

struct FrobeniusSchurFactors {
  Matrix lower;   // unit lower block triangular
  Matrix middle;  // block diagonal diag(A, schur complement)
  Matrix upper;   // == lower^H
};

/// Factorization M = lower * middle * upper for Hermitian M with leading
/// block positive definite.
FrobeniusSchurFactors frobenius_schur_factor(const Matrix& m, Index split);

/// Sum of log eigenvalues of a positive definite matrix.
double logdet_pd(const HermitianPd& a);

/// Second regularized determinant det2(I - A) = det(I - A) * exp(trace(A)).
Complex det2_regularized(const Matrix& a);

/// Determinant through LU with partial pivoting.
Complex det_lu(const Matrix& a);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Solves X A X = B for Hermitian positive definite X, given Hermitian
/// positive definite A and B: X = A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}.
Matrix riccati_geometric_mean(const HermitianPd& a, const HermitianPd& b);

}  // namespace mopuc
