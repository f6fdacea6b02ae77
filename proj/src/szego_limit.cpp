#include "mopuc/szego_limit.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace mopuc {

std::vector<double> det_ratio_sequence(const MomentSequence& mu, int n_max) {
  if (n_max < 0) throw DimensionError("det_ratio_sequence: negative order");
  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    ratios.push_back(std::exp(schur_kappa(mu, n, Side::Right).log_det()));
  }
  return ratios;
}

namespace {

Complex det2_of_toeplitz(const MomentSequence& mu, int blocks) {
  if (blocks == 0) return Complex(1.0, 0.0);
  const BlockToeplitz t = assemble(mu, blocks, Side::Right);
  const Matrix eye = Matrix::Identity(t.dense.rows(), t.dense.cols());
  return det2_regularized(eye - t.dense);
}

}  // namespace

std::vector<double> det2_ratio_sequence(const MomentSequence& mu, int n_max) {
  if (n_max < 0) throw DimensionError("det2_ratio_sequence: negative order");
  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(n_max) + 1);
  Complex prev = det2_of_toeplitz(mu, 0);
  for (int n = 0; n <= n_max; ++n) {
    const Complex cur = det2_of_toeplitz(mu, n + 1);
    if (std::abs(prev) == 0.0) {
      throw NumericalError("det2_ratio_sequence: vanishing regularized determinant");
    }
    ratios.push_back(std::abs(cur / prev));
    prev = cur;
  }
  return ratios;
}

std::vector<double> partial_products(const std::vector<VerblunskyData>& alphas) {
  std::vector<double> prods;
  prods.reserve(alphas.size() + 1);
  double log_acc = 0.0;
  prods.push_back(1.0);
  for (const VerblunskyData& vb : alphas) {
    const Index d = vb.alpha.rows();
    const Matrix defect =
        Matrix::Identity(d, d) - vb.alpha * vb.alpha.adjoint();
    const double det = std::real(det_lu(defect));
    if (!(det > 0.0)) {
      throw NumericalError("partial_products: reflection coefficient " +
                           std::to_string(vb.index) +
                           " is not a strict contraction");
    }
    log_acc += std::log(det);
    prods.push_back(std::exp(log_acc));
  }
  return prods;
}

double szego_integral(const SpectralDensity& w) {
  validate_density(w);
  double acc = 0.0;
  for (Index m = 0; m < w.grid_size; ++m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        symmetrized(w.values[static_cast<size_t>(m)]), Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues()(0) > 0.0)) {
      throw NumericalError(
          "szego_integral: density singular at grid point " + std::to_string(m) +
          "; the integral diverges (Szego condition fails)");
    }
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
      acc += std::log(es.eigenvalues()(i));
    }
  }
  return acc / static_cast<double>(w.grid_size);
}

SzegoReport limit_report(const SpectralDensity& w, int n_max, double tol) {
  if (n_max < 1) throw DimensionError("limit_report: n_max must be >= 1");

  SzegoReport rep;
  rep.tolerance = tol;

  SpectralDensity density = w;
  {
    const MomentSequence mu0 = moments_from_density(w, 0);
    const Matrix eye = Matrix::Identity(w.dim, w.dim);
    if ((mu0.moment_nonneg(0) - eye).norm() > 1e-12) {
      density = normalize_density(w);
      rep.normalized_applied = true;
    }
  }

  const MomentSequence mu = moments_from_density(density, n_max);
  const OpucChain chain = OpucChain::build(mu, n_max);

  rep.n_values.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rep.n_values[static_cast<size_t>(n)] = n;
  rep.det_ratios = det_ratio_sequence(mu, n_max);
  rep.det2_ratios = det2_ratio_sequence(mu, n_max);
  rep.partial_products = partial_products(chain.verblunsky_all());

  rep.szego_integral = szego_integral(density);
  rep.szego_exponential = std::exp(rep.szego_integral);
  rep.gap = std::abs(rep.det_ratios.back() - rep.szego_exponential) /
            rep.szego_exponential;
  rep.converged = rep.gap <= tol;

  for (const VerblunskyData& vb : chain.verblunsky_all()) {
    rep.alpha_square_sum += operator_norm(vb.alpha.adjoint() * vb.alpha);
  }
  return rep;
}

}  // namespace mopuc
