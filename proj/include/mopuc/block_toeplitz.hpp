#pragma once

#include "mopuc/linalg.hpp"
#include "mopuc/spectral_measure.hpp"
#include "mopuc/types.hpp"

#include <vector>

namespace mopuc {

/// Condition numbers beyond this are flagged untrusted.
inline constexpr double kToeplitzConditionLimit = 1e12;

/// Dense block Toeplitz matrix of moments. Right: block (i, j) = mu_{i-j};
/// Left: block (i, j) = mu_{j-i}. Hermitian and positive definite for
/// nontrivial measures.
struct BlockToeplitz {
  Side side = Side::Right;
  Index dim = 0;
  int blocks_order = 0;  // number of block rows/columns
  Matrix dense;
  double condition_estimate = 0.0;
  bool trusted = true;

  Matrix block(int i, int j) const;
};

BlockToeplitz assemble(const MomentSequence& mu, int n, Side side);

/// Schur complements of mu_0 in T_{n+1}^{R,L}: the prediction-error
/// covariances of order n. Positive definite and decreasing in n in the
/// semidefinite order.
struct SchurData {
  HermitianPd kappa_r;
  HermitianPd kappa_l;
  int n = 0;
};

SchurData schur_pair(const MomentSequence& mu, int n);

/// kappa_n for one side via block Cholesky of T_{n+1} (last Schur pivot).
HermitianPd schur_kappa(const MomentSequence& mu, int n, Side side);

/// kappa_n directly as mu_0 - border^H T_n^{-1} border; kept as an
/// independent route for checks, not the production path.
Matrix schur_kappa_definitional(const MomentSequence& mu, int n, Side side);

/// Factors V_0..V_{n-1} with V_i^H V_j equal to block (i, j) of T. The V_j
/// are the block columns of the upper triangular Cholesky factor R with
/// R^H R = T.
std::vector<Matrix> kolmogorov_factor(const BlockToeplitz& t);

}  // namespace mopuc
