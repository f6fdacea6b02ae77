#pragma once

#include "mopuc/block_toeplitz.hpp"
#include "mopuc/linalg.hpp"
#include "mopuc/matrix_polynomial.hpp"
#include "mopuc/spectral_measure.hpp"

#include <utility>
#include <vector>

namespace mopuc {

/// Reversal P*(z) = z^n P(1/conj(z))^H at the nominal degree n.
MatrixPolynomial reverse(const MatrixPolynomial& p);

/// Monic orthogonal polynomial of degree n as a Schur complement: the
/// coefficients below degree n solve the order-n block Toeplitz system
/// against the border moment column.
MatrixPolynomial monic_via_schur(const MomentSequence& mu, int n, Side side);

/// phi = Phi * kappa^{-1/2} (Right) or kappa^{-1/2} * Phi (Left).
MatrixPolynomial normalize(const MatrixPolynomial& phi, const HermitianPd& kappa,
                           Side side);

/// Reflection coefficient alpha_n with the Hermitian defect square roots
/// rho_l = (I - alpha^H alpha)^{1/2} and rho_r = (I - alpha alpha^H)^{1/2}.
struct VerblunskyData {
  int index = 0;
  Matrix alpha;
  HermitianPd rho_r;
  HermitianPd rho_l;
};

/// Builds VerblunskyData from a strict contraction; throws NumericalError
/// when the operator norm of alpha reaches 1.
VerblunskyData verblunsky_from_alpha(int index, const Matrix& alpha);

/// Monic and normalized orthogonal polynomials of both kinds together with
/// their prediction-error covariances and reflection coefficients, built
/// degree by degree from a moment sequence.
class OpucChain {
 public:
  static OpucChain build(const MomentSequence& mu, int n_max);

  Index dim() const { return mu_.dim(); }
  int n_max() const { return n_max_; }
  const MomentSequence& moments() const { return mu_; }

  const MatrixPolynomial& monic(Side s, int n) const;
  const MatrixPolynomial& normalized(Side s, int n) const;
  MatrixPolynomial normalized_reversed(Side s, int n) const;
  const HermitianPd& kappa(Side s, int n) const;
  const VerblunskyData& verblunsky(int n) const;  // n in [0, n_max)
  const std::vector<VerblunskyData>& verblunsky_all() const { return verblunsky_; }

  /// max over 0 <= j <= k <= n_max of || <<Phi_k, Phi_j>> - delta_{kj} kappa_k ||_F.
  double orthogonality_residual(Side s) const;

 private:
  OpucChain(MomentSequence mu, int n_max);

  MomentSequence mu_;
  int n_max_;
  std::vector<MatrixPolynomial> monic_r_, monic_l_;
  std::vector<MatrixPolynomial> norm_r_, norm_l_;
  std::vector<HermitianPd> kappa_r_, kappa_l_;
  std::vector<VerblunskyData> verblunsky_;
};

/// Extracts alpha_n from the chain via the right formula
/// alpha_n = -kappa_n^{-R/2} Phi_{n+1}^R(0)^H kappa_n^{L/2}, cross-checks the
/// left formula and the Hermitian defect identities, and throws
/// InvariantViolation on disagreement.
VerblunskyData verblunsky_from_chain(const OpucChain& chain, int n,
                                     double tol = 1e-8);

/// Normalized polynomials regenerated from reflection coefficients alone,
/// assuming mu_0 = I. phi_l_star[k] is the degree-k reversal of the left
/// polynomial; kappa lists run 0..alphas.size().
struct RecursionChain {
  std::vector<MatrixPolynomial> phi_r;
  std::vector<MatrixPolynomial> phi_l_star;
  std::vector<HermitianPd> kappa_r;
  std::vector<HermitianPd> kappa_l;
};

RecursionChain forward_recursion(const std::vector<Matrix>& alphas, Index dim);

/// One backward step: recovers degree-n polynomials from the degree-(n+1)
/// pair and alpha_n. The division by z must leave no constant remainder
/// beyond 1e-8 relative, otherwise the inputs are inconsistent.
std::pair<MatrixPolynomial, MatrixPolynomial> inverse_recursion(
    const MatrixPolynomial& phi_r_next, const MatrixPolynomial& phi_l_star_next,
    const Matrix& alpha, Index dim);

/// 2d x 2d one-step transfer matrix of the normalized recursion.
/// Left flavor:  [[z rho_l^{-1}, -rho_l^{-1} alpha^H], [-z rho_r^{-1} alpha, rho_r^{-1}]].
/// Right flavor: [[z rho_r^{-1}, -z alpha rho_l^{-1}], [-alpha^H rho_r^{-1}, rho_l^{-1}]].
Matrix transfer_matrix(const Matrix& alpha, const HermitianPd& rho_r,
                       const HermitianPd& rho_l, Complex z, Side side);

/// Explicit inverse of transfer_matrix; requires z != 0.
Matrix transfer_matrix_inverse(const Matrix& alpha, const HermitianPd& rho_r,
                               const HermitianPd& rho_l, Complex z, Side side);

/// Residuals of the identities every valid chain satisfies; all should be at
/// numerical noise level for exact-moment inputs.
struct ChainIdentityReport {
  double monic_recursion_r = 0.0;  // Phi_{n+1}^R = z Phi_n^R + Phi_n^{L,*} Phi_{n+1}^R(0)
  double monic_recursion_l = 0.0;  // Phi_{n+1}^L = z Phi_n^L + Phi_{n+1}^L(0) Phi_n^{R,*}
  double alpha_agreement = 0.0;    // right vs left extraction of alpha_n
  double rho_identity = 0.0;       // Hermitian defect roots vs symmetric kappa ratios
  double kappa_step_r = 0.0;       // kappa_{n+1}^R = kappa_n^{R/2}(I - aa^H)kappa_n^{R/2}
  double kappa_step_l = 0.0;
  double kappa_det_product = 0.0;  // det kappa_n = det mu_0 * prod det(I - a_k a_k^H)
  double orthonormality = 0.0;     // << phi_n, phi_n >> = I

  double max_residual() const;
};

ChainIdentityReport chain_identity_report(const OpucChain& chain);

}  // namespace mopuc
