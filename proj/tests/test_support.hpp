#pragma once

#include "mopuc/linalg.hpp"
#include "mopuc/matrix_polynomial.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral_measure.hpp"

#include <vector>

namespace mopuc::testing {

inline Matrix random_hermitian(DeterministicRng& rng, Index d) {
  const Matrix g = rng.gaussian_matrix(d, d);
  return symmetrized(g);
}

inline Matrix random_hermitian_pd(DeterministicRng& rng, Index d,
                                  double floor = 0.1) {
  const Matrix g = rng.gaussian_matrix(d, d);
  return Matrix(symmetrized(g * g.adjoint()) + floor * Matrix::Identity(d, d));
}

/// Strict contraction with operator norm at most max_norm.
inline Matrix random_contraction(DeterministicRng& rng, Index d,
                                 double max_norm = 0.7) {
  Matrix g = rng.gaussian_matrix(d, d);
  const double norm = operator_norm(g);
  const double target = max_norm * (0.3 + 0.7 * rng.uniform());
  return Matrix(g * (target / norm));
}

inline Matrix random_unitary(DeterministicRng& rng, Index d) {
  const Matrix g = rng.gaussian_matrix(d, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  return q;
}

/// Quadrature inner products evaluated directly on the density grid. These
/// are the independent oracle for everything the moment-contraction path
/// computes; they never touch MomentSequence.
inline Matrix quad_inner_right(const MatrixPolynomial& p,
                               const MatrixPolynomial& q,
                               const SpectralDensity& w) {
  Matrix acc = Matrix::Zero(w.dim, w.dim);
  for (Index m = 0; m < w.grid_size; ++m) {
    const Complex z = w.grid_point(m);
    acc += p(z).adjoint() * w.values[static_cast<size_t>(m)] * q(z);
  }
  return acc / static_cast<double>(w.grid_size);
}

inline Matrix quad_inner_left(const MatrixPolynomial& p,
                              const MatrixPolynomial& q,
                              const SpectralDensity& w) {
  Matrix acc = Matrix::Zero(w.dim, w.dim);
  for (Index m = 0; m < w.grid_size; ++m) {
    const Complex z = w.grid_point(m);
    acc += q(z) * w.values[static_cast<size_t>(m)] * p(z).adjoint();
  }
  return acc / static_cast<double>(w.grid_size);
}

/// Monic orthogonal polynomials by Gram-Schmidt on the monomials under the
/// quadrature inner product; an independent route to the Schur-complement
/// construction.
inline std::vector<MatrixPolynomial> gram_schmidt_monic(const SpectralDensity& w,
                                                        int n_max, Side side) {
  std::vector<MatrixPolynomial> out;
  std::vector<Matrix> gram_inv;  // inverses of <<P_k, P_k>>
  for (int n = 0; n <= n_max; ++n) {
    MatrixPolynomial p = MatrixPolynomial::monomial(w.dim, n);
    for (int k = 0; k < n; ++k) {
      if (side == Side::Right) {
        const Matrix proj =
            gram_inv[static_cast<size_t>(k)] *
            quad_inner_right(out[static_cast<size_t>(k)],
                             MatrixPolynomial::monomial(w.dim, n), w);
        p = p - out[static_cast<size_t>(k)].right_multiplied(proj);
      } else {
        const Matrix proj =
            quad_inner_left(out[static_cast<size_t>(k)],
                            MatrixPolynomial::monomial(w.dim, n), w) *
            gram_inv[static_cast<size_t>(k)];
        p = p - out[static_cast<size_t>(k)].left_multiplied(proj);
      }
    }
    const Matrix gram = side == Side::Right ? quad_inner_right(p, p, w)
                                            : quad_inner_left(p, p, w);
    gram_inv.push_back(HermitianPd(gram).inverse());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace mopuc::testing
