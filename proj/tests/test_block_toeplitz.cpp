#include "mopuc/block_toeplitz.hpp"
#include "mopuc/random.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace mopuc;
using namespace mopuc::testing;

namespace {

MomentSequence moments_2plus2cos(int order) {
  std::vector<Matrix> nonneg(static_cast<size_t>(order) + 1, Matrix::Zero(1, 1));
  nonneg[0](0, 0) = 2.0;
  if (order >= 1) nonneg[1](0, 0) = 1.0;
  return MomentSequence(1, order, std::move(nonneg));
}

MomentSequence random_moments(uint64_t seed, Index d, int order,
                              Index grid = 1024) {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  spec.dim = d;
  spec.random_degree = 2;
  spec.seed = seed;
  spec.floor_eps = 0.15;
  return moments_from_density(builtin_density(spec, grid), order);
}

}  // namespace

TEST_SUITE_BEGIN("block_toeplitz");

TEST_CASE("lebesgue assembles to the identity") {
  DensitySpec spec;
  spec.dim = 2;
  const MomentSequence mu =
      moments_from_density(builtin_density(spec, 128), 3);
  const BlockToeplitz t = assemble(mu, 3, Side::Right);
  CHECK((t.dense - Matrix::Identity(6, 6)).norm() < 1e-12);
  CHECK(t.trusted);
}

TEST_CASE("scalar 2+2cos Toeplitz and Schur values") {
  const MomentSequence mu = moments_2plus2cos(3);
  const BlockToeplitz t = assemble(mu, 2, Side::Right);
  Matrix expected(2, 2);
  expected << 2.0, 1.0, 1.0, 2.0;
  CHECK((t.dense - expected).norm() < 1e-13);

  CHECK(schur_kappa(mu, 0, Side::Right).matrix()(0, 0).real() ==
        doctest::Approx(2.0));
  CHECK(schur_kappa(mu, 1, Side::Right).matrix()(0, 0).real() ==
        doctest::Approx(1.5));
}

TEST_CASE("right and left Toeplitz matrices are flip conjugates") {
  const MomentSequence mu = random_moments(1234, 2, 5);
  const int n = 4;
  const BlockToeplitz tr = assemble(mu, n, Side::Right);
  const BlockToeplitz tl = assemble(mu, n, Side::Left);
  const Index d = mu.dim();
  Matrix flip = Matrix::Zero(n * d, n * d);
  for (int i = 0; i < n; ++i) {
    flip.block((n - 1 - i) * d, i * d, d, d) = Matrix::Identity(d, d);
  }
  CHECK((tr.dense - flip * tl.dense * flip).norm() < 1e-12);
}

TEST_CASE("schur_pair matches the definitional formula and stays PD monotone") {
  const MomentSequence mu = random_moments(77, 3, 8);
  for (int n = 0; n <= 6; ++n) {
    const SchurData sd = schur_pair(mu, n);
    CHECK((sd.kappa_r.matrix() -
           schur_kappa_definitional(mu, n, Side::Right)).norm() < 1e-10);
    CHECK((sd.kappa_l.matrix() -
           schur_kappa_definitional(mu, n, Side::Left)).norm() < 1e-10);
  }
  // kappa_n decreasing in the semidefinite order.
  for (int n = 0; n < 6; ++n) {
    const Matrix diff = schur_kappa(mu, n, Side::Right).matrix() -
                        schur_kappa(mu, n + 1, Side::Right).matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(diff),
                                             Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()(0) > -1e-10);
  }
}

TEST_CASE("determinant telescopes through the Schur complement") {
  const MomentSequence mu = random_moments(911, 2, 7);
  for (int n = 1; n <= 6; ++n) {
    const double det_n = std::real(det_lu(assemble(mu, n, Side::Right).dense));
    const double det_n1 = std::real(det_lu(assemble(mu, n + 1, Side::Right).dense));
    const double kappa_det =
        std::exp(schur_kappa(mu, n, Side::Right).log_det());
    CHECK(std::abs(det_n1 / det_n - kappa_det) <= 1e-9 * kappa_det);
  }
}

TEST_CASE("kolmogorov factorization: identity and scalar cases") {
  DensitySpec spec;
  spec.dim = 2;
  const MomentSequence mu =
      moments_from_density(builtin_density(spec, 128), 3);
  const BlockToeplitz t = assemble(mu, 3, Side::Right);
  const auto v = kolmogorov_factor(t);
  REQUIRE(v.size() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Matrix prod = v[i].adjoint() * v[j];
      const Matrix expected = i == j ? Matrix::Identity(2, 2)
                                     : Matrix(Matrix::Zero(2, 2));
      CHECK((prod - expected).norm() < 1e-12);
    }
  }

  const MomentSequence mu2 = moments_2plus2cos(2);
  const BlockToeplitz t2 = assemble(mu2, 2, Side::Right);
  const auto v2 = kolmogorov_factor(t2);
  CHECK(std::abs(v2[0](0, 0) - Complex(std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(v2[1](0, 0) - Complex(1.0 / std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(v2[1](1, 0) - Complex(std::sqrt(1.5))) < 1e-12);
  CHECK(std::abs((v2[0].adjoint() * v2[1])(0, 0) - Complex(1.0)) < 1e-12);
}

TEST_CASE("kolmogorov factors reconstruct random block Toeplitz matrices") {
  const MomentSequence mu = random_moments(2024, 4, 8);
  const BlockToeplitz t = assemble(mu, 8, Side::Right);  // 32 x 32
  const auto v = kolmogorov_factor(t);
  double worst = 0.0;
  for (int i = 0; i < t.blocks_order; ++i) {
    for (int j = 0; j < t.blocks_order; ++j) {
      worst = std::max(worst, (v[i].adjoint() * v[j] - t.block(i, j)).norm());
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("assembly rejects insufficient moments") {
  const MomentSequence mu = moments_2plus2cos(2);
  CHECK_THROWS_AS((void)assemble(mu, 4, Side::Right), DimensionError);
}

TEST_SUITE_END();
