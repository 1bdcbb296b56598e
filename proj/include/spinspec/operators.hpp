#pragma once

#include <cstddef>
#include <vector>

#include "spinspec/rational.hpp"
#include "spinspec/weights.hpp"

namespace spinspec {

// Every operator here is diagonal on K-types, so its full content is the
// scalar it multiplies each V_eps(j) or V_eps(j,q) by.  Wherever a defining
// combination and a stated closed form both exist, both are computed and
// compared exactly; disagreement throws InternalMismatchError and means a
// transcription bug, never bad input.

// Dirac operator on spinors (k = 0): eps * J, J = n/2 + j.
Rational dirac_eig(int n, int j, int eps);

// Odd-power Dirac factorization D (D^2 - 1) ... (D^2 - l^2):
// eps * J * prod_{a=1..l} (J^2 - a^2).
Rational d_odd_eig(int n, int l, int j, int eps);

// The conformally covariant first-order operator on the k-form-spinor
// subbundle: eps * 2 L (q + n/2 - k), L = n/2 + 1 + j.  Requires k >= 1.
Rational p_k_eig(int n, int k, int j, int q, int eps);

// Normalized version (divide by n - 2k + 2): eps * L on q = 1 and
// eps * (n-2k)/(n-2k+2) * L on q = 0.  For k = 1 this is the
// Rarita-Schwinger spectrum.  k = 0 is rejected; use dirac_eig.
Rational a_k0_eig(int n, int k, int j, int q, int eps);

// Second-order pieces (all eps-independent).  q = 1 resp. q = 0 kernels
// are genuine zeros, not errors.
Rational tt_star_eig(int n, int k, int j, int q);   // 0 on q=1
Rational gstar_g_eig(int n, int k, int j, int q);   // 0 on q=1
Rational t_star_t_eig(int n, int k, int j, int q);  // 0 on q=0

// Correction coefficient a_l = -16 k l^2 / ((n-2k+2)(n-2k+2-2l)(n-2k+2+2l)).
Rational a_l_coeff(int n, int k, int l);

// Eigenvalue of A_{k,l} = A_{k,0}^2 - l^2 + a_l T T*.  The scalar is
// eps-independent (the square kills the sign), so no eps parameter.
// Computed both from the defining combination and from the closed scalars
// (L^2 - l^2 on q=1; ((n-2k)^2-4l^2)/((n-2k+2)^2-4l^2) * (L^2 - l^2) on q=0).
Rational a_kl_eig(int n, int k, int l, int j, int q);

// Eigenvalue of the order-(2l+1) product A_{k,0} A_{k,1} ... A_{k,l},
// computed factor-by-factor and checked against the closed form
// eps * L (L^2-1) ... (L^2-l^2), with prefactor (n-2k-2l)/(n-2k+2+2l) on q=0.
Rational product_eig(int n, int k, int l, int j, int q, int eps);

// One grid point where the ratio operator/Z came out off the constant.
struct VerificationFailure {
  KTypeId node;
  Rational ratio;
};

// Result of sweeping operator_eig / Z over a full (j, q, eps) grid.
struct VerificationReport {
  int n = 3;
  int k = 0;
  int l = 0;
  int jmax = 0;
  Rational constant;   // ratio at the first grid point
  std::size_t grid_size = 0;
  std::vector<VerificationFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Checks that the constructed odd-order operator is a single constant
// multiple of the spectral function of order 2l+1 across the whole grid:
// product_eig / z_case2 for k >= 1, d_odd_eig / z_case1 for k = 0.
VerificationReport verify_intertwinor(int n, int k, int l, int jmax);

}  // namespace spinspec
