#include "mopuc/matrix_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mopuc {

MatrixPolynomial::MatrixPolynomial(Index dim, std::vector<Matrix> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  if (dim_ <= 0) throw DimensionError("MatrixPolynomial: dim must be positive");
  if (coeffs_.empty()) {
    throw DimensionError("MatrixPolynomial: needs at least one coefficient");
  }
  for (const Matrix& c : coeffs_) {
    if (c.rows() != dim_ || c.cols() != dim_) {
      throw DimensionError("MatrixPolynomial: coefficient shape mismatch");
    }
  }
}

MatrixPolynomial MatrixPolynomial::constant(const Matrix& a) {
  return MatrixPolynomial(a.rows(), {a});
}

MatrixPolynomial MatrixPolynomial::identity(Index dim) {
  return constant(Matrix::Identity(dim, dim));
}

MatrixPolynomial MatrixPolynomial::monomial(Index dim, int degree) {
  if (degree < 0) throw DimensionError("monomial: degree must be >= 0");
  std::vector<Matrix> c(static_cast<size_t>(degree) + 1, Matrix::Zero(dim, dim));
  c.back() = Matrix::Identity(dim, dim);
  return MatrixPolynomial(dim, std::move(c));
}

Matrix MatrixPolynomial::operator()(Complex z) const {
  // Horner; the scalar argument commutes with the matrix coefficients.
  Matrix acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) {
    acc = acc * z + coeffs_[static_cast<size_t>(k)];
  }
  return acc;
}

MatrixPolynomial MatrixPolynomial::reversed() const {
  std::vector<Matrix> c(coeffs_.size());
  const size_t n = coeffs_.size() - 1;
  for (size_t k = 0; k <= n; ++k) c[k] = coeffs_[n - k].adjoint();
  return MatrixPolynomial(dim_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::times_z() const {
  std::vector<Matrix> c;
  c.reserve(coeffs_.size() + 1);
  c.push_back(Matrix::Zero(dim_, dim_));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return MatrixPolynomial(dim_, std::move(c));
}

MatrixPolynomial MatrixPolynomial::divided_by_z(double rel_tol) const {
  const double scale = std::max(max_coeff_norm(), 1e-300);
  const double remainder = coeffs_.front().norm();
  if (remainder > rel_tol * scale) {
    std::ostringstream os;
    os << "divided_by_z: nonzero constant remainder " << remainder
       << " (relative " << remainder / scale << ")";
    throw NumericalError(os.str());
  }
  if (coeffs_.size() == 1) return MatrixPolynomial(dim_, {Matrix::Zero(dim_, dim_)});
  return MatrixPolynomial(dim_, {coeffs_.begin() + 1, coeffs_.end()});
}

MatrixPolynomial MatrixPolynomial::right_multiplied(const Matrix& c) const {
  std::vector<Matrix> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
  return MatrixPolynomial(dim_, std::move(out));
}

MatrixPolynomial MatrixPolynomial::left_multiplied(const Matrix& c) const {
  std::vector<Matrix> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = c * coeffs_[k];
  return MatrixPolynomial(dim_, std::move(out));
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& other) const {
  if (dim_ != other.dim_) throw DimensionError("polynomial add: dim mismatch");
  std::vector<Matrix> out(std::max(coeffs_.size(), other.coeffs_.size()),
                          Matrix::Zero(dim_, dim_));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return MatrixPolynomial(dim_, std::move(out));
}

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& other) const {
  if (dim_ != other.dim_) throw DimensionError("polynomial sub: dim mismatch");
  std::vector<Matrix> out(std::max(coeffs_.size(), other.coeffs_.size()),
                          Matrix::Zero(dim_, dim_));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
  return MatrixPolynomial(dim_, std::move(out));
}

double MatrixPolynomial::max_coeff_norm() const {
  double m = 0.0;
  for (const Matrix& c : coeffs_) m = std::max(m, c.norm());
  return m;
}

double max_coeff_distance(const MatrixPolynomial& p, const MatrixPolynomial& q) {
  if (p.dim() != q.dim()) throw DimensionError("max_coeff_distance: dim mismatch");
  const int top = std::max(p.degree(), q.degree());
  double m = 0.0;
  const Matrix zero = Matrix::Zero(p.dim(), p.dim());
  for (int k = 0; k <= top; ++k) {
    const Matrix& a = k <= p.degree() ? p.coeff(k) : zero;
    const Matrix& b = k <= q.degree() ? q.coeff(k) : zero;
    m = std::max(m, (a - b).norm());
  }
  return m;
}

}  // namespace mopuc
