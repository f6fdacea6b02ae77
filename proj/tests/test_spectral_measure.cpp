#include "mopuc/opuc.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral_measure.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace mopuc;
using namespace mopuc::testing;

namespace {

DensitySpec scalar_trig_2plus2cos() {
  // W(theta) = 2 + 2 cos(theta) + floor, floor = 0 here: the density touches
  // zero at theta = pi but stays nonnegative, and mu_0 = 2 is PD.
  DensitySpec spec;
  spec.family = DensitySpec::Family::TrigPoly;
  spec.dim = 1;
  Matrix c0(1, 1), c1(1, 1);
  c0(0, 0) = 2.0;
  c1(0, 0) = 1.0;
  spec.trig_coeffs = {c0, c1};
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("spectral_measure");

TEST_CASE("lebesgue moments: identity and zeros") {
  DensitySpec spec;
  spec.dim = 2;
  const SpectralDensity w = builtin_density(spec, 256);
  const MomentSequence mu = moments_from_density(w, 4);
  CHECK((mu.moment(0) - Matrix::Identity(2, 2)).norm() < 1e-13);
  for (int j = 1; j <= 4; ++j) {
    CHECK(mu.moment(j).norm() < 1e-13);
    CHECK(mu.moment(-j).norm() < 1e-13);
  }
}

TEST_CASE("analytic Fourier coefficients of 2 + 2cos") {
  const SpectralDensity w = builtin_density(scalar_trig_2plus2cos(), 512);
  const MomentSequence mu = moments_from_density(w, 3);
  CHECK(std::abs(mu.moment(0)(0, 0) - Complex(2.0)) < 1e-12);
  CHECK(std::abs(mu.moment(1)(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(mu.moment(-1)(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(mu.moment(2).norm() < 1e-12);
  CHECK(mu.moment(3).norm() < 1e-12);
}

TEST_CASE("block-diagonal density gives block-diagonal moments") {
  DeterministicRng rng(31);
  const Index m_grid = 512;
  SpectralDensity w;
  w.dim = 2;
  w.grid_size = m_grid;
  w.values.resize(m_grid);
  for (Index m = 0; m < m_grid; ++m) {
    const double t = 2.0 * std::numbers::pi * double(m) / double(m_grid);
    Matrix v = Matrix::Zero(2, 2);
    v(0, 0) = 1.0 + 0.5 * std::cos(t);
    v(1, 1) = 2.0 + std::sin(t);
    w.values[static_cast<size_t>(m)] = v;
  }
  const MomentSequence mu = moments_from_density(w, 3);
  for (int j = 0; j <= 3; ++j) {
    CHECK(std::abs(mu.moment(j)(0, 1)) < 1e-13);
    CHECK(std::abs(mu.moment(j)(1, 0)) < 1e-13);
  }
}

TEST_CASE("moment quadrature matches direct grid sums on random densities") {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = 3;
  spec.random_degree = 2;
  spec.seed = 99;
  spec.floor_eps = 0.2;
  const SpectralDensity w = builtin_density(spec, 1024);
  const MomentSequence mu = moments_from_density(w, 5);
  // mu_{-j} is the adjoint of mu_j by construction; spot-check against a
  // fresh quadrature with the opposite sign.
  for (int j = 1; j <= 5; ++j) {
    Matrix direct = Matrix::Zero(3, 3);
    for (Index m = 0; m < w.grid_size; ++m) {
      const double t = w.theta(m) * j;
      direct += Complex(std::cos(t), std::sin(t)) * w.values[static_cast<size_t>(m)];
    }
    direct /= double(w.grid_size);
    CHECK((mu.moment(-j) - direct).norm() < 1e-12);
  }
}

TEST_CASE("grid too coarse is rejected") {
  DensitySpec spec;
  spec.dim = 1;
  const SpectralDensity w = builtin_density(spec, 64);
  CHECK_THROWS_AS((void)moments_from_density(w, 8), DimensionError);
  CHECK_NOTHROW((void)moments_from_density(w, 7));
}

TEST_CASE("inner products: trivial cases") {
  DensitySpec spec;
  spec.dim = 2;
  const SpectralDensity w = builtin_density(spec, 128);
  const MomentSequence mu = moments_from_density(w, 3);

  const MatrixPolynomial one = MatrixPolynomial::identity(2);
  CHECK((inner_product_right(one, one, mu) - mu.moment(0)).norm() < 1e-13);
  CHECK((inner_product_left(one, one, mu) - mu.moment(0)).norm() < 1e-13);

  const MatrixPolynomial z = MatrixPolynomial::monomial(2, 1);
  CHECK(inner_product_right(z, one, mu).norm() < 1e-13);
  CHECK(inner_product_left(z, one, mu).norm() < 1e-13);
}

TEST_CASE("inner products agree with the quadrature oracle") {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = 2;
  spec.random_degree = 3;
  spec.seed = 7;
  spec.floor_eps = 0.1;
  const SpectralDensity w = builtin_density(spec, 1024);
  const MomentSequence mu = moments_from_density(w, 6);

  DeterministicRng rng(32);
  std::vector<Matrix> pc, qc;
  for (int k = 0; k <= 3; ++k) pc.push_back(rng.gaussian_matrix(2, 2));
  for (int k = 0; k <= 2; ++k) qc.push_back(rng.gaussian_matrix(2, 2));
  const MatrixPolynomial p(2, pc), q(2, qc);

  CHECK((inner_product_right(p, q, mu) - quad_inner_right(p, q, w)).norm() < 1e-10);
  CHECK((inner_product_left(p, q, mu) - quad_inner_left(p, q, w)).norm() < 1e-10);

  // Adjoint symmetry of both products.
  CHECK((inner_product_left(p, q, mu) -
         inner_product_left(q, p, mu).adjoint()).norm() < 1e-12);
  CHECK((inner_product_right(p, q, mu) -
         inner_product_right(q, p, mu).adjoint()).norm() < 1e-12);

  CHECK_THROWS_AS(
      (void)inner_product_right(MatrixPolynomial::monomial(2, 7), q, mu),
      DimensionError);
}

TEST_CASE("reversal exchange identity links the two inner products") {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = 2;
  spec.random_degree = 2;
  spec.seed = 41;
  spec.floor_eps = 0.15;
  const SpectralDensity w = builtin_density(spec, 1024);
  const MomentSequence mu = moments_from_density(w, 5);

  DeterministicRng rng(42);
  std::vector<Matrix> pc, qc;
  for (int k = 0; k <= 3; ++k) pc.push_back(rng.gaussian_matrix(2, 2));
  for (int k = 0; k <= 3; ++k) qc.push_back(rng.gaussian_matrix(2, 2));
  const MatrixPolynomial p(2, pc), q(2, qc);

  // <<p*, q*>>_L == <<q, p>>_R^H for same-degree reversals.
  const Matrix lhs = inner_product_left(p.reversed(), q.reversed(), mu);
  const Matrix rhs = inner_product_right(q, p, mu).adjoint();
  CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("bernstein_szego_density basics") {
  // Degree zero: constant identity polynomial gives the Lebesgue weight.
  const SpectralDensity w0 =
      bernstein_szego_density(MatrixPolynomial::identity(2), 64);
  for (const Matrix& v : w0.values) {
    CHECK((v - Matrix::Identity(2, 2)).norm() < 1e-13);
  }

  // Scalar alpha = 0.5 roundtrip: mu_0 = 1 and the first moment is 0.5.
  DensitySpec spec;
  spec.family = DensitySpec::Family::BsFromAlphas;
  spec.dim = 1;
  Matrix a(1, 1);
  a(0, 0) = 0.5;
  spec.alphas = {a};
  const SpectralDensity w = builtin_density(spec, 512);
  const MomentSequence mu = moments_from_density(w, 2);
  CHECK(std::abs(mu.moment(0)(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(mu.moment(1)(0, 0) - Complex(0.5)) < 1e-12);
}

TEST_CASE("bernstein_szego_density rejects singular polynomials") {
  // z - 1 vanishes at theta = 0, which is a grid point.
  std::vector<Matrix> coeffs{-Matrix::Identity(1, 1), Matrix::Identity(1, 1)};
  const MatrixPolynomial unit_root(1, coeffs);
  CHECK_THROWS_AS((void)bernstein_szego_density(unit_root, 64), NumericalError);
}

TEST_CASE("normalize_density makes the zeroth moment identity") {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = 3;
  spec.random_degree = 2;
  spec.seed = 5;
  spec.floor_eps = 0.1;
  const SpectralDensity w = builtin_density(spec, 512);
  const SpectralDensity wn = normalize_density(w);
  const MomentSequence mu = moments_from_density(wn, 0);
  CHECK((mu.moment(0) - Matrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("builtin_density: trig validation and reproducibility") {
  DensitySpec bad;
  bad.family = DensitySpec::Family::TrigPoly;
  bad.dim = 1;
  Matrix c0(1, 1), c1(1, 1);
  c0(0, 0) = 1.0;
  c1(0, 0) = 2.0;  // 1 + 4cos dips negative
  bad.trig_coeffs = {c0, c1};
  CHECK_THROWS_AS((void)builtin_density(bad, 128), NumericalError);

  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = 2;
  spec.random_degree = 3;
  spec.seed = 7;
  spec.floor_eps = 0.1;
  const SpectralDensity w1 = builtin_density(spec, 256);
  const SpectralDensity w2 = builtin_density(spec, 256);
  double max_diff = 0.0;
  for (size_t m = 0; m < w1.values.size(); ++m) {
    max_diff = std::max(max_diff, (w1.values[m] - w2.values[m]).norm());
  }
  CHECK(max_diff == 0.0);  // identical seeds, identical grids

  spec.seed = 8;
  const SpectralDensity w3 = builtin_density(spec, 256);
  CHECK((w1.values[0] - w3.values[0]).norm() > 1e-6);
}

TEST_CASE("non-contractive alpha rejected in bs_from_alphas") {
  DensitySpec spec;
  spec.family = DensitySpec::Family::BsFromAlphas;
  spec.dim = 1;
  Matrix a(1, 1);
  a(0, 0) = 1.2;
  spec.alphas = {a};
  CHECK_THROWS_AS((void)builtin_density(spec, 128), NumericalError);
}

TEST_SUITE_END();
