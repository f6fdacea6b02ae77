#include "mopuc/cd_kernels.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace mopuc {

KernelValue kernel_sum(const OpucChain& chain, Side side, int n, Complex w,
                       Complex z) {
  if (n < 0 || n > chain.n_max()) {
    throw DimensionError("kernel_sum: order exceeds the built chain");
  }
  const Index d = chain.dim();
  Matrix acc = Matrix::Zero(d, d);
  for (int k = 0; k <= n; ++k) {
    const MatrixPolynomial& phi = chain.normalized(side, k);
    if (side == Side::Right) {
      acc += phi(z) * phi(w).adjoint();
    } else {
      acc += phi(w).adjoint() * phi(z);
    }
  }
  return KernelValue{side, n, w, z, std::move(acc)};
}

KernelValue kernel_toeplitz(const MomentSequence& mu, Side side, int n,
                            Complex w, Complex z) {
  if (n < 0) throw DimensionError("kernel_toeplitz: negative order");
  if (std::abs(w) == 0.0) {
    throw NumericalError("kernel_toeplitz: w = 0 is not on the unit circle");
  }
  if (std::abs(std::abs(w) - 1.0) > 1e-9) {
    throw NumericalError("kernel_toeplitz: |w| must be 1");
  }
  const Index d = mu.dim();
  const BlockToeplitz t = assemble(mu, n + 1, side);
  Eigen::LLT<Matrix> llt(t.dense);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("kernel_toeplitz: singular Toeplitz matrix");
  }

  const Complex wbar = std::conj(w);
  Matrix col(static_cast<Index>(n + 1) * d, d);
  for (int k = 0; k <= n; ++k) {
    const Complex p = side == Side::Right ? std::pow(wbar, k) : std::pow(z, k);
    col.block(static_cast<Index>(k) * d, 0, d, d) = p * Matrix::Identity(d, d);
  }
  const Matrix solved = llt.solve(col);

  Matrix acc = Matrix::Zero(d, d);
  for (int k = 0; k <= n; ++k) {
    const Complex p = side == Side::Right ? std::pow(z, k) : std::pow(wbar, k);
    acc += p * solved.block(static_cast<Index>(k) * d, 0, d, d);
  }
  return KernelValue{side, n, w, z, std::move(acc)};
}

KernelValue kernel_cd(const OpucChain& chain, Side side, int n, Complex w,
                      Complex z) {
  if (n < 0 || n > chain.n_max()) {
    throw DimensionError("kernel_cd: order exceeds the built chain");
  }
  const Complex wz = std::conj(w) * z;
  const Complex denom = Complex(1.0, 0.0) - wz;
  if (std::abs(denom) <= 1e-12) {
    throw NumericalError(
        "kernel_cd: conj(w) z too close to 1; evaluate kernel_sum instead");
  }
  Matrix numer;
  if (side == Side::Right) {
    const MatrixPolynomial phi_r = chain.normalized(Side::Right, n);
    const MatrixPolynomial phi_ls = chain.normalized_reversed(Side::Left, n);
    numer = phi_ls(z) * phi_ls(w).adjoint() - wz * phi_r(z) * phi_r(w).adjoint();
  } else {
    const MatrixPolynomial phi_l = chain.normalized(Side::Left, n);
    const MatrixPolynomial phi_rs = chain.normalized_reversed(Side::Right, n);
    numer = phi_rs(w).adjoint() * phi_rs(z) - wz * phi_l(w).adjoint() * phi_l(z);
  }
  return KernelValue{side, n, w, z, Matrix(numer / denom)};
}

}  // namespace mopuc
