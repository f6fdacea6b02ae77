#include "mopuc/opuc.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <sstream>

namespace mopuc {

MatrixPolynomial reverse(const MatrixPolynomial& p) { return p.reversed(); }

MatrixPolynomial monic_via_schur(const MomentSequence& mu, int n, Side side) {
  const Index d = mu.dim();
  if (n < 0) throw DimensionError("monic_via_schur: negative degree");
  if (n > mu.order()) {
    throw DimensionError("monic_via_schur: degree exceeds available moments");
  }
  if (n == 0) return MatrixPolynomial::identity(d);

  const BlockToeplitz t = assemble(mu, n, side);
  Matrix border(static_cast<Index>(n) * d, d);
  for (int i = 0; i < n; ++i) {
    const int idx = side == Side::Right ? i - n : n - i;
    border.block(static_cast<Index>(i) * d, 0, d, d) = mu.moment(idx);
  }
  Eigen::LLT<Matrix> llt(t.dense);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("monic_via_schur: singular Toeplitz system at degree " +
                         std::to_string(n));
  }
  const Matrix solved = llt.solve(border);

  std::vector<Matrix> coeffs(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const Matrix y = solved.block(static_cast<Index>(i) * d, 0, d, d);
    // Right: coefficients solve T^R y = border directly; left: the
    // coefficient row is the adjoint of the solved column.
    coeffs[static_cast<size_t>(i)] = side == Side::Right ? Matrix(-y) : Matrix(-y.adjoint());
  }
  coeffs[static_cast<size_t>(n)] = Matrix::Identity(d, d);
  return MatrixPolynomial(d, std::move(coeffs));
}

MatrixPolynomial normalize(const MatrixPolynomial& phi, const HermitianPd& kappa,
                           Side side) {
  if (phi.dim() != kappa.dim()) throw DimensionError("normalize: dim mismatch");
  const Matrix s = kappa.inv_sqrt();
  return side == Side::Right ? phi.right_multiplied(s) : phi.left_multiplied(s);
}

VerblunskyData verblunsky_from_alpha(int index, const Matrix& alpha) {
  if (alpha.rows() != alpha.cols()) {
    throw DimensionError("verblunsky_from_alpha: alpha must be square");
  }
  const Index d = alpha.rows();
  const Matrix eye = Matrix::Identity(d, d);
  const double norm = operator_norm(alpha);
  if (!(norm < 1.0)) {
    std::ostringstream os;
    os << "reflection coefficient " << index << " is not a strict contraction"
       << " (operator norm " << norm << ")";
    throw NumericalError(os.str());
  }
  HermitianPd defect_r(symmetrized(eye - alpha * alpha.adjoint()));
  HermitianPd defect_l(symmetrized(eye - alpha.adjoint() * alpha));
  return VerblunskyData{index, alpha, hermitian_sqrt(defect_r),
                        hermitian_sqrt(defect_l)};
}

OpucChain::OpucChain(MomentSequence mu, int n_max)
    : mu_(std::move(mu)), n_max_(n_max) {}

OpucChain OpucChain::build(const MomentSequence& mu, int n_max) {
  if (n_max < 0) throw DimensionError("OpucChain: negative order");
  if (n_max > mu.order()) {
    throw DimensionError("OpucChain: order " + std::to_string(n_max) +
                         " exceeds moment order " + std::to_string(mu.order()));
  }
  OpucChain chain(mu, n_max);
  chain.monic_r_.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    chain.monic_r_.push_back(monic_via_schur(mu, n, Side::Right));
    chain.monic_l_.push_back(monic_via_schur(mu, n, Side::Left));
    chain.kappa_r_.push_back(schur_kappa(mu, n, Side::Right));
    chain.kappa_l_.push_back(schur_kappa(mu, n, Side::Left));
    chain.norm_r_.push_back(
        normalize(chain.monic_r_.back(), chain.kappa_r_.back(), Side::Right));
    chain.norm_l_.push_back(
        normalize(chain.monic_l_.back(), chain.kappa_l_.back(), Side::Left));
  }
  for (int n = 0; n + 1 <= n_max; ++n) {
    chain.verblunsky_.push_back(verblunsky_from_chain(chain, n));
  }
  return chain;
}

const MatrixPolynomial& OpucChain::monic(Side s, int n) const {
  const auto& v = s == Side::Right ? monic_r_ : monic_l_;
  return v.at(static_cast<size_t>(n));
}

const MatrixPolynomial& OpucChain::normalized(Side s, int n) const {
  const auto& v = s == Side::Right ? norm_r_ : norm_l_;
  return v.at(static_cast<size_t>(n));
}

MatrixPolynomial OpucChain::normalized_reversed(Side s, int n) const {
  return normalized(s, n).reversed();
}

const HermitianPd& OpucChain::kappa(Side s, int n) const {
  const auto& v = s == Side::Right ? kappa_r_ : kappa_l_;
  return v.at(static_cast<size_t>(n));
}

const VerblunskyData& OpucChain::verblunsky(int n) const {
  return verblunsky_.at(static_cast<size_t>(n));
}

double OpucChain::orthogonality_residual(Side s) const {
  double worst = 0.0;
  for (int k = 0; k <= n_max_; ++k) {
    for (int j = 0; j <= k; ++j) {
      const Matrix ip = s == Side::Right
                            ? inner_product_right(monic(s, k), monic(s, j), mu_)
                            : inner_product_left(monic(s, k), monic(s, j), mu_);
      const Matrix expected =
          j == k ? kappa(s, k).matrix() : Matrix(Matrix::Zero(dim(), dim()));
      worst = std::max(worst, (ip - expected).norm());
    }
  }
  return worst;
}

VerblunskyData verblunsky_from_chain(const OpucChain& chain, int n, double tol) {
  if (n < 0 || n + 1 > chain.n_max()) {
    throw DimensionError("verblunsky_from_chain: chain not built to degree " +
                         std::to_string(n + 1));
  }
  const HermitianPd& kr = chain.kappa(Side::Right, n);
  const HermitianPd& kl = chain.kappa(Side::Left, n);

  const Matrix phi_r0 = chain.monic(Side::Right, n + 1).coeff(0);
  const Matrix phi_l0 = chain.monic(Side::Left, n + 1).coeff(0);
  const Matrix alpha_r = -kr.inv_sqrt() * phi_r0.adjoint() * kl.sqrt();
  const Matrix alpha_l = -kr.sqrt() * phi_l0.adjoint() * kl.inv_sqrt();

  const double disagreement = (alpha_r - alpha_l).norm();
  if (disagreement > tol) {
    std::ostringstream os;
    os << "verblunsky_from_chain: right/left reflection coefficients disagree "
       << "at index " << n << " by " << disagreement
       << "; right = " << alpha_r << ", left = " << alpha_l;
    throw InvariantViolation(os.str());
  }

  VerblunskyData data = verblunsky_from_alpha(n, alpha_r);

  // The defect roots must match the symmetric ratio of consecutive
  // prediction-error covariances.
  const HermitianPd& kr1 = chain.kappa(Side::Right, n + 1);
  const HermitianPd& kl1 = chain.kappa(Side::Left, n + 1);
  const Matrix ratio_r =
      HermitianPd(kr.inv_sqrt() * kr1.matrix() * kr.inv_sqrt()).sqrt();
  const Matrix ratio_l =
      HermitianPd(kl.inv_sqrt() * kl1.matrix() * kl.inv_sqrt()).sqrt();
  const double rho_gap = std::max((ratio_r - data.rho_r.matrix()).norm(),
                                  (ratio_l - data.rho_l.matrix()).norm());
  if (rho_gap > tol) {
    std::ostringstream os;
    os << "verblunsky_from_chain: defect square roots disagree with the "
       << "covariance ratios at index " << n << " by " << rho_gap;
    throw InvariantViolation(os.str());
  }
  return data;
}

RecursionChain forward_recursion(const std::vector<Matrix>& alphas, Index dim) {
  RecursionChain rc;
  const Matrix eye = Matrix::Identity(dim, dim);
  rc.phi_r.push_back(MatrixPolynomial::identity(dim));
  rc.phi_l_star.push_back(MatrixPolynomial::identity(dim));
  rc.kappa_r.emplace_back(eye);
  rc.kappa_l.emplace_back(eye);

  for (size_t k = 0; k < alphas.size(); ++k) {
    const Matrix& alpha = alphas[k];
    if (alpha.rows() != dim || alpha.cols() != dim) {
      throw DimensionError("forward_recursion: alpha shape mismatch at index " +
                           std::to_string(k));
    }
    VerblunskyData vb = verblunsky_from_alpha(static_cast<int>(k), alpha);

    const Matrix kr_half = rc.kappa_r.back().sqrt();
    const Matrix kl_half = rc.kappa_l.back().sqrt();
    HermitianPd kr_next(kr_half * vb.rho_r.matrix() * vb.rho_r.matrix() * kr_half);
    HermitianPd kl_next(kl_half * vb.rho_l.matrix() * vb.rho_l.matrix() * kl_half);

    // Right-acting normalizers kappa_k^{1/2} kappa_{k+1}^{-1/2}.
    const Matrix y_r = kr_half * kr_next.inv_sqrt();
    const Matrix y_l = kl_half * kl_next.inv_sqrt();

    const MatrixPolynomial& pr = rc.phi_r.back();
    const MatrixPolynomial& pls = rc.phi_l_star.back();
    MatrixPolynomial next_r =
        (pr.times_z() - pls.right_multiplied(alpha.adjoint())).right_multiplied(y_r);
    MatrixPolynomial next_ls =
        (pls - pr.times_z().right_multiplied(alpha)).right_multiplied(y_l);
    // The degree-(k+1) term of the reversed-left component cancels exactly.
    std::vector<Matrix> trimmed(next_ls.coeffs().begin(),
                                next_ls.coeffs().end() - 1);
    rc.phi_r.push_back(std::move(next_r));
    rc.phi_l_star.push_back(MatrixPolynomial(dim, std::move(trimmed)));
    rc.kappa_r.push_back(std::move(kr_next));
    rc.kappa_l.push_back(std::move(kl_next));
  }
  return rc;
}

std::pair<MatrixPolynomial, MatrixPolynomial> inverse_recursion(
    const MatrixPolynomial& phi_r_next, const MatrixPolynomial& phi_l_star_next,
    const Matrix& alpha, Index dim) {
  if (phi_r_next.dim() != dim || phi_l_star_next.dim() != dim ||
      alpha.rows() != dim || alpha.cols() != dim) {
    throw DimensionError("inverse_recursion: dimension mismatch");
  }
  const int n1 = phi_r_next.degree();
  if (n1 < 1) throw DimensionError("inverse_recursion: degree must be >= 1");

  VerblunskyData vb = verblunsky_from_alpha(n1 - 1, alpha);
  const Matrix rho_r2_inv = HermitianPd(vb.rho_r.matrix() * vb.rho_r.matrix()).inverse();
  const Matrix rho_l2_inv = HermitianPd(vb.rho_l.matrix() * vb.rho_l.matrix()).inverse();

  // Leading coefficient of phi_r and constant coefficient of phi_l_star carry
  // the inverse covariance square roots.
  HermitianPd kr1_inv_half(symmetrized(phi_r_next.coeff(n1)));
  HermitianPd kl1_inv_half(symmetrized(phi_l_star_next.coeff(0)));
  HermitianPd kr1(kr1_inv_half.inverse() * kr1_inv_half.inverse());
  HermitianPd kl1(kl1_inv_half.inverse() * kl1_inv_half.inverse());

  HermitianPd defect_r(symmetrized(vb.rho_r.matrix() * vb.rho_r.matrix()));
  HermitianPd defect_l(symmetrized(vb.rho_l.matrix() * vb.rho_l.matrix()));
  HermitianPd kr_half(riccati_geometric_mean(defect_r, kr1));
  HermitianPd kl_half(riccati_geometric_mean(defect_l, kl1));

  // x_s = kappa_{n+1}^{s/2} kappa_n^{-s/2}, the inverse of the forward
  // normalizer.
  const Matrix x_r = kr1_inv_half.inverse() * kr_half.inverse();
  const Matrix x_l = kl1_inv_half.inverse() * kl_half.inverse();

  MatrixPolynomial pre_r = phi_r_next.right_multiplied(x_r) +
                           phi_l_star_next.right_multiplied(x_l * alpha.adjoint());
  MatrixPolynomial phi_r =
      pre_r.divided_by_z(1e-8).right_multiplied(rho_r2_inv);

  MatrixPolynomial pre_ls = phi_r_next.right_multiplied(x_r * alpha) +
                            phi_l_star_next.right_multiplied(x_l);
  // Top coefficient cancels; verify and trim to degree n.
  const double top = pre_ls.coeff(pre_ls.degree()).norm();
  if (top > 1e-8 * std::max(pre_ls.max_coeff_norm(), 1e-300)) {
    throw NumericalError(
        "inverse_recursion: inconsistent inputs, top coefficient residual " +
        std::to_string(top));
  }
  std::vector<Matrix> trimmed(pre_ls.coeffs().begin(), pre_ls.coeffs().end() - 1);
  MatrixPolynomial phi_l_star =
      MatrixPolynomial(dim, std::move(trimmed)).right_multiplied(rho_l2_inv);
  return {std::move(phi_r), std::move(phi_l_star)};
}

Matrix transfer_matrix(const Matrix& alpha, const HermitianPd& rho_r,
                       const HermitianPd& rho_l, Complex z, Side side) {
  const Index d = alpha.rows();
  if (alpha.cols() != d || rho_r.dim() != d || rho_l.dim() != d) {
    throw DimensionError("transfer_matrix: dimension mismatch");
  }
  const Matrix rr_inv = rho_r.inverse();
  const Matrix rl_inv = rho_l.inverse();
  Matrix a(2 * d, 2 * d);
  if (side == Side::Left) {
    a.topLeftCorner(d, d) = z * rl_inv;
    a.topRightCorner(d, d) = -rl_inv * alpha.adjoint();
    a.bottomLeftCorner(d, d) = -z * rr_inv * alpha;
    a.bottomRightCorner(d, d) = rr_inv;
  } else {
    a.topLeftCorner(d, d) = z * rr_inv;
    a.topRightCorner(d, d) = -z * alpha * rl_inv;
    a.bottomLeftCorner(d, d) = -alpha.adjoint() * rr_inv;
    a.bottomRightCorner(d, d) = rl_inv;
  }
  return a;
}

Matrix transfer_matrix_inverse(const Matrix& alpha, const HermitianPd& rho_r,
                               const HermitianPd& rho_l, Complex z, Side side) {
  if (std::abs(z) == 0.0) {
    throw NumericalError("transfer_matrix_inverse: z = 0 has no inverse step");
  }
  const Index d = alpha.rows();
  if (alpha.cols() != d || rho_r.dim() != d || rho_l.dim() != d) {
    throw DimensionError("transfer_matrix_inverse: dimension mismatch");
  }
  const Matrix rr_inv = rho_r.inverse();
  const Matrix rl_inv = rho_l.inverse();
  const Complex zi = 1.0 / z;
  Matrix a(2 * d, 2 * d);
  if (side == Side::Right) {
    a.topLeftCorner(d, d) = zi * rr_inv;
    a.topRightCorner(d, d) = rr_inv * alpha;
    a.bottomLeftCorner(d, d) = zi * rl_inv * alpha.adjoint();
    a.bottomRightCorner(d, d) = rl_inv;
  } else {
    a.topLeftCorner(d, d) = zi * rl_inv;
    a.topRightCorner(d, d) = zi * alpha.adjoint() * rr_inv;
    a.bottomLeftCorner(d, d) = alpha * rl_inv;
    a.bottomRightCorner(d, d) = rr_inv;
  }
  return a;
}

double ChainIdentityReport::max_residual() const {
  double m = monic_recursion_r;
  m = std::max(m, monic_recursion_l);
  m = std::max(m, alpha_agreement);
  m = std::max(m, rho_identity);
  m = std::max(m, kappa_step_r);
  m = std::max(m, kappa_step_l);
  m = std::max(m, kappa_det_product);
  m = std::max(m, orthonormality);
  return m;
}

ChainIdentityReport chain_identity_report(const OpucChain& chain) {
  ChainIdentityReport rep;
  const Index d = chain.dim();
  const Matrix eye = Matrix::Identity(d, d);
  const int n_max = chain.n_max();

  for (int n = 0; n <= n_max; ++n) {
    const Matrix ip_r = inner_product_right(chain.normalized(Side::Right, n),
                                            chain.normalized(Side::Right, n),
                                            chain.moments());
    const Matrix ip_l = inner_product_left(chain.normalized(Side::Left, n),
                                           chain.normalized(Side::Left, n),
                                           chain.moments());
    rep.orthonormality = std::max(rep.orthonormality, (ip_r - eye).norm());
    rep.orthonormality = std::max(rep.orthonormality, (ip_l - eye).norm());
  }

  double log_prod = chain.kappa(Side::Right, 0).log_det();
  for (int n = 0; n + 1 <= n_max; ++n) {
    const MatrixPolynomial& mr = chain.monic(Side::Right, n);
    const MatrixPolynomial& ml = chain.monic(Side::Left, n);
    const MatrixPolynomial& mr1 = chain.monic(Side::Right, n + 1);
    const MatrixPolynomial& ml1 = chain.monic(Side::Left, n + 1);

    const MatrixPolynomial pred_r =
        mr.times_z() + ml.reversed().right_multiplied(mr1.coeff(0));
    const MatrixPolynomial pred_l =
        ml.times_z() + mr.reversed().left_multiplied(ml1.coeff(0));
    rep.monic_recursion_r =
        std::max(rep.monic_recursion_r, max_coeff_distance(mr1, pred_r));
    rep.monic_recursion_l =
        std::max(rep.monic_recursion_l, max_coeff_distance(ml1, pred_l));

    const HermitianPd& kr = chain.kappa(Side::Right, n);
    const HermitianPd& kl = chain.kappa(Side::Left, n);
    const HermitianPd& kr1 = chain.kappa(Side::Right, n + 1);
    const HermitianPd& kl1 = chain.kappa(Side::Left, n + 1);
    const Matrix alpha_r = -kr.inv_sqrt() * mr1.coeff(0).adjoint() * kl.sqrt();
    const Matrix alpha_l = -kr.sqrt() * ml1.coeff(0).adjoint() * kl.inv_sqrt();
    rep.alpha_agreement = std::max(rep.alpha_agreement, (alpha_r - alpha_l).norm());

    const VerblunskyData& vb = chain.verblunsky(n);
    const Matrix ratio_r =
        HermitianPd(kr.inv_sqrt() * kr1.matrix() * kr.inv_sqrt()).sqrt();
    const Matrix ratio_l =
        HermitianPd(kl.inv_sqrt() * kl1.matrix() * kl.inv_sqrt()).sqrt();
    rep.rho_identity = std::max(rep.rho_identity,
                                (ratio_r - vb.rho_r.matrix()).norm());
    rep.rho_identity = std::max(rep.rho_identity,
                                (ratio_l - vb.rho_l.matrix()).norm());

    const Matrix kr_half = kr.sqrt();
    const Matrix kl_half = kl.sqrt();
    const Matrix defect_r = eye - vb.alpha * vb.alpha.adjoint();
    const Matrix defect_l = eye - vb.alpha.adjoint() * vb.alpha;
    rep.kappa_step_r = std::max(
        rep.kappa_step_r,
        (kr1.matrix() - kr_half * defect_r * kr_half).norm());
    rep.kappa_step_l = std::max(
        rep.kappa_step_l,
        (kl1.matrix() - kl_half * defect_l * kl_half).norm());

    log_prod += std::log(std::real(det_lu(defect_r)));
    rep.kappa_det_product =
        std::max(rep.kappa_det_product,
                 std::abs(std::exp(kr1.log_det() - log_prod) - 1.0));
  }
  return rep;
}

}  // namespace mopuc
