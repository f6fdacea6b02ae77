#include "mopuc/opuc.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral_measure.hpp"

#include <cmath>
#include <sstream>

namespace mopuc {

namespace {

SpectralDensity lebesgue_density(Index dim, Index grid_size) {
  SpectralDensity w;
  w.dim = dim;
  w.grid_size = grid_size;
  w.values.assign(static_cast<size_t>(grid_size), Matrix::Identity(dim, dim));
  w.label = "lebesgue(d=" + std::to_string(dim) + ")";
  return w;
}

SpectralDensity trig_poly_density(const DensitySpec& spec, Index grid_size) {
  if (spec.trig_coeffs.empty()) {
    throw DimensionError("trig_poly: needs at least the constant coefficient");
  }
  const Index d = spec.dim;
  for (const Matrix& c : spec.trig_coeffs) {
    if (c.rows() != d || c.cols() != d) {
      throw DimensionError("trig_poly: coefficient shape mismatch");
    }
  }
  if (!is_hermitian(spec.trig_coeffs[0], 1e-10)) {
    throw NumericalError("trig_poly: constant coefficient must be Hermitian");
  }
  SpectralDensity w;
  w.dim = d;
  w.grid_size = grid_size;
  w.values.resize(static_cast<size_t>(grid_size));
  w.label = "trig_poly(d=" + std::to_string(d) + ", m=" +
            std::to_string(spec.trig_coeffs.size() - 1) + ")";
  for (Index m = 0; m < grid_size; ++m) {
    const double t = w.theta(m);
    Matrix v = symmetrized(spec.trig_coeffs[0]);
    for (size_t j = 1; j < spec.trig_coeffs.size(); ++j) {
      const Complex phase(std::cos(t * static_cast<double>(j)),
                          std::sin(t * static_cast<double>(j)));
      const Matrix term = phase * spec.trig_coeffs[j];
      v += term + term.adjoint();
    }
    w.values[static_cast<size_t>(m)] = v;
  }
  try {
    validate_density(w);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("trig_poly: not positive definite on the grid: ") +
                         e.what());
  }
  return w;
}

SpectralDensity random_pd_density(const DensitySpec& spec, Index grid_size) {
  if (spec.random_degree < 0) {
    throw DimensionError("random_pd: degree must be >= 0");
  }
  if (!(spec.floor_eps > 0.0)) {
    throw DimensionError("random_pd: floor eps must be positive");
  }
  const Index d = spec.dim;
  DeterministicRng rng(spec.seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.random_degree) + 1.0);
  std::vector<Matrix> coeffs;
  coeffs.reserve(static_cast<size_t>(spec.random_degree) + 1);
  for (int k = 0; k <= spec.random_degree; ++k) {
    coeffs.push_back(scale * rng.gaussian_matrix(d, d));
  }
  MatrixPolynomial p(d, std::move(coeffs));

  SpectralDensity w;
  w.dim = d;
  w.grid_size = grid_size;
  w.values.resize(static_cast<size_t>(grid_size));
  std::ostringstream label;
  label << "random_pd(d=" << d << ", m=" << spec.random_degree
        << ", seed=" << spec.seed << ", eps=" << spec.floor_eps << ")";
  w.label = label.str();
  const Matrix floor = spec.floor_eps * Matrix::Identity(d, d);
  for (Index m = 0; m < grid_size; ++m) {
    const Matrix v = p(w.grid_point(m));
    w.values[static_cast<size_t>(m)] = symmetrized(v * v.adjoint()) + floor;
  }
  return w;
}

SpectralDensity bs_density(const DensitySpec& spec, Index grid_size) {
  const Index d = spec.dim;
  for (const Matrix& a : spec.alphas) {
    if (a.rows() != d || a.cols() != d) {
      throw DimensionError("bs_from_alphas: alpha shape mismatch");
    }
  }
  const RecursionChain rc = forward_recursion(spec.alphas, d);
  SpectralDensity w = bernstein_szego_density(rc.phi_r.back(), grid_size);
  w.label = "bs_from_alphas(d=" + std::to_string(d) + ", n=" +
            std::to_string(spec.alphas.size()) + ")";
  return w;
}

}  // namespace

SpectralDensity builtin_density(const DensitySpec& spec, Index grid_size) {
  if (spec.dim <= 0) throw DimensionError("builtin_density: dim must be positive");
  if (grid_size <= 0) throw DimensionError("builtin_density: empty grid");
  switch (spec.family) {
    case DensitySpec::Family::Lebesgue:
      return lebesgue_density(spec.dim, grid_size);
    case DensitySpec::Family::TrigPoly:
      return trig_poly_density(spec, grid_size);
    case DensitySpec::Family::RandomPd:
      return random_pd_density(spec, grid_size);
    case DensitySpec::Family::BsFromAlphas:
      return bs_density(spec, grid_size);
  }
  throw DimensionError("builtin_density: unknown family");
}

}  // namespace mopuc
