#pragma once

#include "mopuc/opuc.hpp"
#include "mopuc/spectral_measure.hpp"

#include <vector>

namespace mopuc {

/// Both sides of the Szego limit for one density: Toeplitz determinant
/// ratios, their regularized variants, the reflection-coefficient partial
/// products, and the log-det spectral integral.
struct SzegoReport {
  std::vector<int> n_values;             // 0..n_max
  std::vector<double> det_ratios;        // det T_{n+1} / det T_n == det kappa_n
  std::vector<double> det2_ratios;       // same ratio through det2(T) = det2(I - (I - T))
  std::vector<double> partial_products;  // prod_{k<n} det(I - alpha_k alpha_k^H)
  double szego_integral = 0.0;           // (1/2pi) integral log det W
  double szego_exponential = 1.0;
  double tolerance = 1e-6;
  bool converged = false;
  double gap = 0.0;                     // |det_ratio[n_max] - exp| / exp
  bool normalized_applied = false;      // mu_0 was congruence-normalized to I
  double alpha_square_sum = 0.0;        // sum_k ||alpha_k^H alpha_k||, summability proxy
};

/// det kappa_n for n = 0..n_max, computed in log space from the block
/// Cholesky pivots. Entry n equals det T_{n+1} / det T_n.
std::vector<double> det_ratio_sequence(const MomentSequence& mu, int n_max);

/// Same ratios through the regularized determinant det2(T) applied to the
/// dense Toeplitz matrices; agrees with det_ratio_sequence when mu_0 = I.
std::vector<double> det2_ratio_sequence(const MomentSequence& mu, int n_max);

/// partial_products[n] = prod_{k=0}^{n-1} det(I - alpha_k alpha_k^H);
/// size alphas.size() + 1, leading entry 1.
std::vector<double> partial_products(const std::vector<VerblunskyData>& alphas);

/// (1/M) sum_m log det W(theta_m). Throws NumericalError when the density is
/// singular at a grid point (the integral diverges to -infinity).
double szego_integral(const SpectralDensity& w);

/// Full report at order n_max; the density is normalized to mu_0 = I first
/// when necessary. converged is set when the last determinant ratio matches
/// exp(szego_integral) within the relative tolerance.
SzegoReport limit_report(const SpectralDensity& w, int n_max, double tol = 1e-6);

}  // namespace mopuc
