#pragma once

#include "mopuc/opuc.hpp"
#include "mopuc/spectral_measure.hpp"
#include "mopuc/types.hpp"

namespace mopuc {

/// One evaluation of a Christoffel-Darboux kernel.
///
/// Conventions (argument order matters for matrix values):
///   K_n^R(w, z) = sum_{k=0}^n phi_k^R(z) phi_k^R(w)^H
///   K_n^L(w, z) = sum_{k=0}^n phi_k^L(w)^H phi_k^L(z)
struct KernelValue {
  Side side = Side::Right;
  int n = 0;
  Complex w;
  Complex z;
  Matrix value;
};

/// Direct partial sum of normalized polynomial outer products.
KernelValue kernel_sum(const OpucChain& chain, Side side, int n, Complex w,
                       Complex z);

/// Quadratic form in the inverse block Toeplitz matrix of order n+1:
///   right: [I zI .. z^n I] T_{n+1}^{-R} [I conj(w)I .. conj(w)^n I]^T
///   left:  [I conj(w)I .. conj(w)^n I] T_{n+1}^{-L} [I zI .. z^n I]^T
/// Requires |w| = 1.
KernelValue kernel_toeplitz(const MomentSequence& mu, Side side, int n,
                            Complex w, Complex z);

/// Closed form from the degree-n polynomials:
///   right: [phi_n^{L,*}(z) phi_n^{L,*}(w)^H - conj(w) z phi_n^R(z) phi_n^R(w)^H] / (1 - conj(w) z)
///   left:  [phi_n^{R,*}(w)^H phi_n^{R,*}(z) - conj(w) z phi_n^L(w)^H phi_n^L(z)] / (1 - conj(w) z)
/// Rejects conj(w) z within 1e-12 of 1; use kernel_sum on the diagonal.
KernelValue kernel_cd(const OpucChain& chain, Side side, int n, Complex w,
                      Complex z);

}  // namespace mopuc
