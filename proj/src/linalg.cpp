#include "mopuc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace mopuc {

HermitianPd::HermitianPd(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("HermitianPd: matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const double scale = max_abs(a);
  const double asym = max_abs(a - a.adjoint().eval());
  if (scale > 0.0 && asym > kHermitianRelTol * scale) {
    std::ostringstream os;
    os << "HermitianPd: input not Hermitian, max asymmetry " << asym
       << " exceeds " << kHermitianRelTol * scale;
    throw NumericalError(os.str());
  }
  mat_ = symmetrized(a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_);
  if (es.info() != Eigen::Success) {
    throw NumericalError("HermitianPd: eigendecomposition failed");
  }
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
  const double lambda_max = evals_(evals_.size() - 1);
  const double lambda_min = evals_(0);
  if (!(lambda_min > kPositiveRelTol * std::max(lambda_max, 0.0))) {
    std::ostringstream os;
    os << "HermitianPd: matrix not positive definite, smallest eigenvalue "
       << lambda_min << " (largest " << lambda_max << ")";
    throw NumericalError(os.str());
  }
}

namespace {

Matrix apply_spectral(const HermitianPd& a, double (*f)(double)) {
  RealVector mapped = a.eigenvalues().unaryExpr([f](double x) { return f(x); });
  return symmetrized(a.eigenvectors() * mapped.asDiagonal() *
                     a.eigenvectors().adjoint());
}

}  // namespace

Matrix HermitianPd::sqrt() const {
  return apply_spectral(*this, [](double x) { return std::sqrt(x); });
}

Matrix HermitianPd::inv_sqrt() const {
  return apply_spectral(*this, [](double x) { return 1.0 / std::sqrt(x); });
}

Matrix HermitianPd::inverse() const {
  return apply_spectral(*this, [](double x) { return 1.0 / x; });
}

double HermitianPd::log_det() const {
  double acc = 0.0;
  for (Index i = 0; i < evals_.size(); ++i) acc += std::log(evals_(i));
  return acc;
}

double HermitianPd::condition() const {
  return evals_(evals_.size() - 1) / evals_(0);
}

HermitianPd hermitian_sqrt(const HermitianPd& a) { return HermitianPd(a.sqrt()); }

HermitianPd hermitian_inv_sqrt(const HermitianPd& a) {
  return HermitianPd(a.inv_sqrt());
}

namespace {

void check_split(const Matrix& m, Index split) {
  if (m.rows() != m.cols()) {
    throw DimensionError("schur_complement: matrix must be square");
  }
  if (split <= 0 || split >= m.rows()) {
    throw DimensionError("schur_complement: split " + std::to_string(split) +
                         " out of range for size " + std::to_string(m.rows()));
  }
  if (!is_hermitian(m, 1e-10)) {
    throw NumericalError("schur_complement: input not Hermitian");
  }
}

}  // namespace

Matrix schur_complement(const Matrix& m, Index split) {
  check_split(m, split);
  const Index rest = m.rows() - split;
  HermitianPd a(m.topLeftCorner(split, split));
  const Matrix b = m.topRightCorner(split, rest);
  const Matrix c = m.bottomRightCorner(rest, rest);
  return symmetrized(c - b.adjoint() * a.inverse() * b);
}

FrobeniusSchurFactors frobenius_schur_factor(const Matrix& m, Index split) {
  check_split(m, split);
  const Index n = m.rows();
  const Index rest = n - split;
  HermitianPd a(m.topLeftCorner(split, split));
  const Matrix b = m.topRightCorner(split, rest);
  const Matrix a_inv_b = a.inverse() * b;

  FrobeniusSchurFactors f;
  f.lower = Matrix::Identity(n, n);
  f.lower.bottomLeftCorner(rest, split) = a_inv_b.adjoint();
  f.middle = Matrix::Zero(n, n);
  f.middle.topLeftCorner(split, split) = a.matrix();
  f.middle.bottomRightCorner(rest, rest) =
      symmetrized(m.bottomRightCorner(rest, rest) - b.adjoint() * a_inv_b);
  f.upper = f.lower.adjoint();
  return f;
}

double logdet_pd(const HermitianPd& a) { return a.log_det(); }

Complex det2_regularized(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("det2_regularized: matrix must be square");
  }
  const Matrix i_minus_a = Matrix::Identity(a.rows(), a.cols()) - a;
  return det_lu(i_minus_a) * std::exp(a.trace());
}

Complex det_lu(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("det_lu: matrix must be square");
  }
  if (a.rows() == 0) return Complex(1.0, 0.0);
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
  const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
  return std::sqrt(std::max(top, 0.0));
}

Matrix riccati_geometric_mean(const HermitianPd& a, const HermitianPd& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("riccati_geometric_mean: dimension mismatch");
  }
  const Matrix a_half = a.sqrt();
  const Matrix a_inv_half = a.inv_sqrt();
  HermitianPd inner(a_half * b.matrix() * a_half);
  return symmetrized(a_inv_half * inner.sqrt() * a_inv_half);
}

}  // namespace mopuc
