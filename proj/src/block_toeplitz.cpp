#include "mopuc/block_toeplitz.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <sstream>

namespace mopuc {

Matrix BlockToeplitz::block(int i, int j) const {
  if (i < 0 || j < 0 || i >= blocks_order || j >= blocks_order) {
    throw DimensionError("BlockToeplitz::block: index out of range");
  }
  return dense.block(static_cast<Index>(i) * dim, static_cast<Index>(j) * dim,
                     dim, dim);
}

BlockToeplitz assemble(const MomentSequence& mu, int n, Side side) {
  if (n < 1) throw DimensionError("assemble: need at least one block");
  if (n - 1 > mu.order()) {
    throw DimensionError("assemble: insufficient moments for order " +
                         std::to_string(n));
  }
  const Index d = mu.dim();
  BlockToeplitz t;
  t.side = side;
  t.dim = d;
  t.blocks_order = n;
  t.dense.resize(static_cast<Index>(n) * d, static_cast<Index>(n) * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = side == Side::Right ? i - j : j - i;
      t.dense.block(static_cast<Index>(i) * d, static_cast<Index>(j) * d, d, d) =
          mu.moment(idx);
    }
  }
  t.dense = symmetrized(t.dense);

  Eigen::SelfAdjointEigenSolver<Matrix> es(t.dense, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(es.eigenvalues().size() - 1);
  if (!(lo > 0.0)) {
    std::ostringstream os;
    os << "assemble: " << side_name(side) << " Toeplitz matrix of order " << n
       << " not positive definite (smallest eigenvalue " << lo
       << "); the measure is invalid or trivial";
    throw NumericalError(os.str());
  }
  t.condition_estimate = hi / lo;
  t.trusted = t.condition_estimate <= kToeplitzConditionLimit;
  return t;
}

HermitianPd schur_kappa(const MomentSequence& mu, int n, Side side) {
  const Index d = mu.dim();
  if (n == 0) return HermitianPd(mu.moment_nonneg(0));
  const BlockToeplitz t = assemble(mu, n + 1, side);
  Eigen::LLT<Matrix> llt(t.dense);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("schur_kappa: Cholesky failed for order " +
                         std::to_string(n));
  }
  // T = L L^H; the trailing d x d pivot block of L carries the Schur
  // complement of the leading n*d block.
  const Matrix l_tail =
      Matrix(llt.matrixL()).block(static_cast<Index>(n) * d,
                                  static_cast<Index>(n) * d, d, d);
  return HermitianPd(l_tail * l_tail.adjoint());
}

SchurData schur_pair(const MomentSequence& mu, int n) {
  return SchurData{schur_kappa(mu, n, Side::Right),
                   schur_kappa(mu, n, Side::Left), n};
}

Matrix schur_kappa_definitional(const MomentSequence& mu, int n, Side side) {
  const Index d = mu.dim();
  if (n == 0) return mu.moment_nonneg(0);
  const BlockToeplitz t = assemble(mu, n, side);
  Matrix border(static_cast<Index>(n) * d, d);
  for (int i = 0; i < n; ++i) {
    // Right border: mu_{i-n}; left border: mu_{n-i}.
    const int idx = side == Side::Right ? i - n : n - i;
    border.block(static_cast<Index>(i) * d, 0, d, d) = mu.moment(idx);
  }
  Eigen::LLT<Matrix> llt(t.dense);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("schur_kappa_definitional: Cholesky failed");
  }
  return symmetrized(mu.moment_nonneg(0) -
                     border.adjoint() * llt.solve(border));
}

std::vector<Matrix> kolmogorov_factor(const BlockToeplitz& t) {
  Eigen::LLT<Matrix> llt(t.dense);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("kolmogorov_factor: matrix not positive definite");
  }
  const Matrix r = Matrix(llt.matrixL()).adjoint();  // upper, R^H R = T
  std::vector<Matrix> factors(static_cast<size_t>(t.blocks_order));
  for (int j = 0; j < t.blocks_order; ++j) {
    factors[static_cast<size_t>(j)] =
        r.block(0, static_cast<Index>(j) * t.dim, r.rows(), t.dim);
  }
  return factors;
}

}  // namespace mopuc
