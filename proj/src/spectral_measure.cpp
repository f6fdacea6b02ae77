#include "mopuc/spectral_measure.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

namespace mopuc {

double SpectralDensity::theta(Index m) const {
  return 2.0 * std::numbers::pi * static_cast<double>(m) /
         static_cast<double>(grid_size);
}

Complex SpectralDensity::grid_point(Index m) const {
  const double t = theta(m);
  return Complex(std::cos(t), std::sin(t));
}

void validate_density(const SpectralDensity& w) {
  if (w.dim <= 0) throw DimensionError("density: dim must be positive");
  if (w.grid_size <= 0) throw DimensionError("density: empty grid");
  if (static_cast<Index>(w.values.size()) != w.grid_size) {
    throw DimensionError("density: values/grid_size mismatch");
  }
  double global_scale = 0.0;
  for (const Matrix& v : w.values) global_scale = std::max(global_scale, max_abs(v));
  Matrix mean = Matrix::Zero(w.dim, w.dim);
  for (Index m = 0; m < w.grid_size; ++m) {
    const Matrix& v = w.values[static_cast<size_t>(m)];
    if (v.rows() != w.dim || v.cols() != w.dim) {
      throw DimensionError("density: value shape mismatch at grid point " +
                           std::to_string(m));
    }
    if (!is_hermitian(v, 1e-10)) {
      throw NumericalError("density: value not Hermitian at grid point " +
                           std::to_string(m));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(v),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-10 * global_scale) {
      std::ostringstream os;
      os << "density: value not positive semidefinite at grid point " << m
         << " (eigenvalue " << es.eigenvalues()(0) << ")";
      throw NumericalError(os.str());
    }
    mean += v;
  }
  mean = symmetrized(mean / static_cast<double>(w.grid_size));
  Eigen::SelfAdjointEigenSolver<Matrix> es(mean, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues()(0) > 0.0)) {
    throw NumericalError("density: trivial measure, zeroth moment not positive definite");
  }
}

MomentSequence::MomentSequence(Index dim, int order, std::vector<Matrix> nonneg)
    : dim_(dim), order_(order), nonneg_(std::move(nonneg)) {
  if (order_ < 0) throw DimensionError("MomentSequence: negative order");
  if (static_cast<int>(nonneg_.size()) != order_ + 1) {
    throw DimensionError("MomentSequence: expected order+1 stored moments");
  }
  for (const Matrix& m : nonneg_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw DimensionError("MomentSequence: moment shape mismatch");
    }
  }
  nonneg_[0] = symmetrized(nonneg_[0]);
  // Nontriviality: mu_0 must be positive definite.
  HermitianPd check(nonneg_[0]);
  (void)check;
}

Matrix MomentSequence::moment(int j) const {
  if (std::abs(j) > order_) {
    throw DimensionError("MomentSequence: moment index " + std::to_string(j) +
                         " exceeds order " + std::to_string(order_));
  }
  if (j >= 0) return nonneg_[static_cast<size_t>(j)];
  return nonneg_[static_cast<size_t>(-j)].adjoint();
}

const Matrix& MomentSequence::moment_nonneg(int j) const {
  if (j < 0 || j > order_) {
    throw DimensionError("MomentSequence: nonnegative index out of range");
  }
  return nonneg_[static_cast<size_t>(j)];
}

MomentSequence moments_from_density(const SpectralDensity& w, int order) {
  if (order < 0) throw DimensionError("moments_from_density: negative order");
  if (w.grid_size < 8 * (static_cast<Index>(order) + 1)) {
    std::ostringstream os;
    os << "moments_from_density: grid size " << w.grid_size
       << " too coarse for order " << order << " (need >= " << 8 * (order + 1)
       << ")";
    throw DimensionError(os.str());
  }
  validate_density(w);

  std::vector<Matrix> nonneg(static_cast<size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    Matrix acc = Matrix::Zero(w.dim, w.dim);
    for (Index m = 0; m < w.grid_size; ++m) {
      const double t = w.theta(m) * static_cast<double>(j);
      acc += Complex(std::cos(t), -std::sin(t)) * w.values[static_cast<size_t>(m)];
    }
    nonneg[static_cast<size_t>(j)] = acc / static_cast<double>(w.grid_size);
  }
  return MomentSequence(w.dim, order, std::move(nonneg));
}

namespace {

void check_degrees(const MatrixPolynomial& p, const MatrixPolynomial& q,
                   const MomentSequence& mu) {
  if (p.dim() != mu.dim() || q.dim() != mu.dim()) {
    throw DimensionError("inner product: dimension mismatch");
  }
  if (p.degree() > mu.order() || q.degree() > mu.order()) {
    throw DimensionError("inner product: polynomial degree exceeds available moments");
  }
}

}  // namespace

Matrix inner_product_right(const MatrixPolynomial& p, const MatrixPolynomial& q,
                           const MomentSequence& mu) {
  check_degrees(p, q, mu);
  Matrix acc = Matrix::Zero(mu.dim(), mu.dim());
  for (int k = 0; k <= p.degree(); ++k) {
    const Matrix pk_adj = p.coeff(k).adjoint();
    for (int j = 0; j <= q.degree(); ++j) {
      acc += pk_adj * mu.moment(k - j) * q.coeff(j);
    }
  }
  return acc;
}

Matrix inner_product_left(const MatrixPolynomial& p, const MatrixPolynomial& q,
                          const MomentSequence& mu) {
  check_degrees(p, q, mu);
  Matrix acc = Matrix::Zero(mu.dim(), mu.dim());
  for (int k = 0; k <= p.degree(); ++k) {
    const Matrix pk_adj = p.coeff(k).adjoint();
    for (int j = 0; j <= q.degree(); ++j) {
      acc += q.coeff(j) * mu.moment(k - j) * pk_adj;
    }
  }
  return acc;
}

SpectralDensity bernstein_szego_density(const MatrixPolynomial& phi_r,
                                        Index grid_size) {
  if (grid_size <= 0) throw DimensionError("bernstein_szego_density: empty grid");
  const Index d = phi_r.dim();
  SpectralDensity w;
  w.dim = d;
  w.grid_size = grid_size;
  w.values.resize(static_cast<size_t>(grid_size));
  w.label = "bernstein-szego(degree " + std::to_string(phi_r.degree()) + ")";

  for (Index m = 0; m < grid_size; ++m) {
    const Matrix phi = phi_r(w.grid_point(m));
    const Matrix gram = symmetrized(phi * phi.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const double top = es.eigenvalues()(d - 1);
    if (!(es.eigenvalues()(0) > 1e-14 * std::max(top, 1.0))) {
      throw NumericalError(
          "bernstein_szego_density: polynomial singular at grid point " +
          std::to_string(m));
    }
    const RealVector inv = es.eigenvalues().cwiseInverse();
    w.values[static_cast<size_t>(m)] =
        symmetrized(es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint());
  }
  validate_density(w);
  return w;
}

SpectralDensity normalize_density(const SpectralDensity& w) {
  const MomentSequence mu0 = moments_from_density(w, 0);
  HermitianPd m0(mu0.moment_nonneg(0));
  const Matrix s = m0.inv_sqrt();
  SpectralDensity out;
  out.dim = w.dim;
  out.grid_size = w.grid_size;
  out.label = w.label + " (normalized)";
  out.values.resize(w.values.size());
  for (size_t m = 0; m < w.values.size(); ++m) {
    out.values[m] = symmetrized(s * w.values[m] * s);
  }
  return out;
}

std::string DensitySpec::family_name() const {
  switch (family) {
    case Family::Lebesgue: return "lebesgue";
    case Family::TrigPoly: return "trig_poly";
    case Family::RandomPd: return "random_pd";
    case Family::BsFromAlphas: return "bs_from_alphas";
  }
  return "unknown";
}

}  // namespace mopuc
