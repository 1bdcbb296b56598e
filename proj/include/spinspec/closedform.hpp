#pragma once

#include "spinspec/rational.hpp"
#include "spinspec/weights.hpp"

namespace spinspec {

// Bundle parameters shared by a family of spectral-function queries.
// J and L are recomputed from j on every call, never cached.
struct SpectralParams {
  int n = 3;                 // odd, >= 3
  int k = 0;                 // 0 <= k <= (n-1)/2
  Rational r;                // order parameter, operator order is 2r

  SpectralParams(int n_, int k_, Rational r_);
  Rational J(int j) const;   // n/2 + j
  Rational L(int j) const;   // n/2 + 1 + j
};

// Gamma(a+r)/Gamma(a-r) as the exact telescoped product
// prod_{i=0..2r-1} (a - r + i), for 2r a nonnegative integer; negative r
// goes through the reciprocal identity.  A zero factor means Gamma(a-r)
// sits on a pole while Gamma(a+r) does not, so the ratio is not a finite
// nonzero rational: that throws GammaPoleError.  Non-integer 2r is not
// representable exactly and throws std::invalid_argument (use the numeric
// path instead).
Rational gamma_ratio(const Rational& a, const Rational& r);

// Floating-point Gamma(a+r)/Gamma(a-r) via std::lgamma; both arguments must
// be strictly positive or NumericDomainError is thrown.
double gamma_ratio_numeric(double a, double r);

// Case I spectral function on V_eps(j):
//   Z_eps(r; j) = eps * gamma_ratio(J + 1/2, r) / gamma_ratio(n/2 + 1/2, r).
// Exact path requires 2r to be a positive odd integer (then all Gamma
// arguments sit at integer offsets and the products are pole-free).
Rational z_case1(int n, const Rational& r, int j, int eps);

// Case II spectral function on V_eps(j, q), 1 <= k <= (n-1)/2:
//   Z_eps(r, j, 1) = eps * gamma_ratio(L + 1/2, r) / gamma_ratio(n/2 + 3/2, r)
//   Z_eps(r, j, 0) = (n - 2k + 1 - 2r)/(n - 2k + 1 + 2r) * Z_eps(r, j, 1).
Rational z_case2(int n, int k, const Rational& r, int j, int q, int eps);

// Dispatch on the K-type's k: Case I for k = 0, Case II otherwise.
Rational z_value(const KTypeId& id, const Rational& r);

// Independent floating-point evaluations of the same functions, built from
// log-Gamma.  Arguments pushed below zero by large r are lifted back into
// lgamma's domain with the recurrence Gamma(x+1) = x Gamma(x); a nonpositive
// integer argument (a true Gamma pole) throws NumericDomainError.
double z_case1_numeric(int n, double r, int j, int eps);
double z_case2_numeric(int n, int k, double r, int j, int q, int eps);
double z_value_numeric(const KTypeId& id, double r);

// True when the exact Case I/II path accepts r: 2r an odd positive integer.
bool exact_order(const Rational& r);

}  // namespace spinspec
