#pragma once

#include "mopuc/linalg.hpp"
#include "mopuc/matrix_polynomial.hpp"
#include "mopuc/types.hpp"

#include <string>
#include <vector>

namespace mopuc {

inline constexpr Index kDefaultGridSize = 4096;

/// Matrix-valued weight W(theta) sampled on the uniform grid
/// theta_m = 2 pi m / grid_size. Values must be Hermitian and positive
/// semidefinite pointwise, and the measure nontrivial (mean value positive
/// definite).
struct SpectralDensity {
  Index dim = 0;
  Index grid_size = 0;
  std::vector<Matrix> values;
  std::string label;

  double theta(Index m) const;
  Complex grid_point(Index m) const;  // e^{i theta_m}
};

/// Throws NumericalError / DimensionError when the density invariants fail.
void validate_density(const SpectralDensity& w);

/// Trigonometric moments mu_j for j = -order..order with mu_{-j} = mu_j^H;
/// only the nonnegative half is stored, the adjoint is formed on access.
class MomentSequence {
 public:
  MomentSequence(Index dim, int order, std::vector<Matrix> nonneg);

  Index dim() const { return dim_; }
  int order() const { return order_; }
  Matrix moment(int j) const;
  const Matrix& moment_nonneg(int j) const;

 private:
  Index dim_;
  int order_;
  std::vector<Matrix> nonneg_;  // mu_0..mu_order
};

/// mu_j = (1/M) sum_m e^{-i j theta_m} W(theta_m), the rectangle rule on the
/// periodic grid (spectrally accurate for smooth weights). Requires
/// grid_size >= 8 (order + 1) to keep aliasing negligible.
MomentSequence moments_from_density(const SpectralDensity& w, int order);

/// <<P, Q>>_R = sum_{k,j} p_k^H mu_{k-j} q_j.
Matrix inner_product_right(const MatrixPolynomial& p, const MatrixPolynomial& q,
                           const MomentSequence& mu);

/// <<P, Q>>_L = sum_{k,j} q_j mu_{k-j} p_k^H.
Matrix inner_product_left(const MatrixPolynomial& p, const MatrixPolynomial& q,
                          const MomentSequence& mu);

/// Density [phi(e^{i theta}) phi(e^{i theta})^H]^{-1} on the grid, from a
/// normalized right polynomial. Fails if phi is singular at a grid point.
SpectralDensity bernstein_szego_density(const MatrixPolynomial& phi_r,
                                        Index grid_size);

/// Congruence by mu_0^{-1/2} on both sides, making the zeroth moment the
/// identity.
SpectralDensity normalize_density(const SpectralDensity& w);

struct DensitySpec {
  enum class Family { Lebesgue, TrigPoly, RandomPd, BsFromAlphas };

  Family family = Family::Lebesgue;
  Index dim = 1;

  // TrigPoly: C_0..C_m with W(theta) = C_0 + sum_j (C_j e^{ij theta} + h.c.).
  std::vector<Matrix> trig_coeffs;

  // RandomPd: W = P(e^{i theta}) P(e^{i theta})^H + floor_eps I with P a
  // seeded random polynomial of the given degree.
  int random_degree = 2;
  uint64_t seed = 0;
  double floor_eps = 0.1;

  // BsFromAlphas: strict contractions driving the forward recursion.
  std::vector<Matrix> alphas;

  std::string family_name() const;
};

SpectralDensity builtin_density(const DensitySpec& spec,
                                Index grid_size = kDefaultGridSize);

}  // namespace mopuc
