#include "spinspec/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinspec/errors.hpp"

namespace spinspec {

namespace {

void check_bundle(int n, int k) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("n must be odd and >= 3, got " +
                                std::to_string(n));
  }
  if (k < 0 || k > (n - 1) / 2) {
    throw std::invalid_argument("k out of range for n = " + std::to_string(n));
  }
}

void check_indices(int j, int eps) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
}

void require_exact_order(const Rational& r) {
  if (!exact_order(r)) {
    throw std::invalid_argument(
        "exact spectral functions need 2r to be an odd positive integer, "
        "got r = " + to_string(r));
  }
}

// log |Gamma(x)| together with the sign of Gamma(x).  lgamma itself is only
// used on positive arguments; x <= 0 is shifted up by the recurrence
// Gamma(x) = Gamma(x+m) / (x (x+1) ... (x+m-1)).
std::pair<double, int> log_abs_gamma(double x) {
  if (x > 0) return {std::lgamma(x), 1};
  if (x == std::floor(x)) {
    throw NumericDomainError("Gamma pole at nonpositive integer argument " +
                             std::to_string(x));
  }
  double log_corr = 0;
  int sign = 1;
  while (x <= 0) {
    log_corr += std::log(std::fabs(x));
    if (x < 0) sign = -sign;
    x += 1;
  }
  return {std::lgamma(x) - log_corr, sign};
}

// Gamma(a+r)/Gamma(b+r) * Gamma(b-r)/Gamma(a-r) in floating point.
double z_ratio_numeric(double a, double b, double r) {
  auto [l1, s1] = log_abs_gamma(a + r);
  auto [l2, s2] = log_abs_gamma(a - r);
  auto [l3, s3] = log_abs_gamma(b + r);
  auto [l4, s4] = log_abs_gamma(b - r);
  return s1 * s2 * s3 * s4 * std::exp(l1 - l2 - l3 + l4);
}

}  // namespace

bool exact_order(const Rational& r) {
  Rational twice = r * 2;
  if (denominator(twice) != 1) return false;
  Int m = numerator(twice);
  return m > 0 && m % 2 != 0;
}

SpectralParams::SpectralParams(int n_, int k_, Rational r_)
    : n(n_), k(k_), r(std::move(r_)) {
  check_bundle(n, k);
}

Rational SpectralParams::J(int j) const { return make_rational(n, 2) + j; }

Rational SpectralParams::L(int j) const {
  return make_rational(n, 2) + 1 + j;
}

Rational gamma_ratio(const Rational& a, const Rational& r) {
  Rational twice = r * 2;
  if (denominator(twice) != 1) {
    throw std::invalid_argument(
        "gamma_ratio is exact only for integer 2r, got r = " + to_string(r));
  }
  if (r < 0) {
    // Reciprocal identity; the positive-r call already rejects zero factors,
    // which here would have meant an infinite ratio.
    return Rational(1) / gamma_ratio(a, -r);
  }
  Int m = numerator(twice);  // number of telescoped factors
  Rational product(1);
  Rational factor = a - r;
  for (Int i = 0; i < m; ++i, factor += 1) {
    if (factor == 0) {
      throw GammaPoleError("gamma_ratio(" + to_string(a) + ", " +
                           to_string(r) +
                           "): Gamma pole at argument " + to_string(a - r));
    }
    product *= factor;
  }
  return product;
}

double gamma_ratio_numeric(double a, double r) {
  if (a + r <= 0 || a - r <= 0) {
    throw NumericDomainError("gamma_ratio_numeric needs a +- r > 0, got a = " +
                             std::to_string(a) + ", r = " + std::to_string(r));
  }
  return std::exp(std::lgamma(a + r) - std::lgamma(a - r));
}

Rational z_case1(int n, const Rational& r, int j, int eps) {
  check_bundle(n, 0);
  check_indices(j, eps);
  require_exact_order(r);
  SpectralParams p(n, 0, r);
  Rational z = gamma_ratio(p.J(j) + make_rational(1, 2), r) /
               gamma_ratio(make_rational(n + 1, 2), r);
  return eps * z;
}

Rational z_case2(int n, int k, const Rational& r, int j, int q, int eps) {
  check_bundle(n, k);
  if (k < 1) throw std::invalid_argument("z_case2 needs k >= 1");
  check_indices(j, eps);
  if (q != 0 && q != 1) throw std::invalid_argument("q must be 0 or 1");
  require_exact_order(r);
  SpectralParams p(n, k, r);
  Rational z = gamma_ratio(p.L(j) + make_rational(1, 2), r) /
               gamma_ratio(make_rational(n + 3, 2), r);
  if (q == 0) {
    Rational den = n - 2 * k + 1 + 2 * r;
    if (den == 0) {
      // Unreachable for odd n and odd 2r (the sum is a nonzero even
      // integer), but the guard keeps the failure mode structured.
      throw GammaPoleError("q = 0 prefactor is singular at r = " +
                           to_string(r));
    }
    z *= (n - 2 * k + 1 - 2 * r) / den;
  }
  return eps * z;
}

Rational z_value(const KTypeId& id, const Rational& r) {
  validate_ktype(id);
  return id.k == 0 ? z_case1(id.n, r, id.j, id.eps)
                   : z_case2(id.n, id.k, r, id.j, *id.q, id.eps);
}

double z_case1_numeric(int n, double r, int j, int eps) {
  check_bundle(n, 0);
  check_indices(j, eps);
  return eps * z_ratio_numeric(n / 2.0 + j + 0.5, (n + 1) / 2.0, r);
}

double z_case2_numeric(int n, int k, double r, int j, int q, int eps) {
  check_bundle(n, k);
  if (k < 1) throw std::invalid_argument("z_case2_numeric needs k >= 1");
  check_indices(j, eps);
  if (q != 0 && q != 1) throw std::invalid_argument("q must be 0 or 1");
  double z = z_ratio_numeric(n / 2.0 + 1 + j + 0.5, (n + 3) / 2.0, r);
  if (q == 0) {
    double den = n - 2 * k + 1 + 2 * r;
    if (den == 0) {
      throw NumericDomainError("q = 0 prefactor is singular at r = " +
                               std::to_string(r));
    }
    z *= (n - 2 * k + 1 - 2 * r) / den;
  }
  return eps * z;
}

double z_value_numeric(const KTypeId& id, double r) {
  validate_ktype(id);
  return id.k == 0 ? z_case1_numeric(id.n, r, id.j, id.eps)
                   : z_case2_numeric(id.n, id.k, r, id.j, *id.q, id.eps);
}

}  // namespace spinspec
