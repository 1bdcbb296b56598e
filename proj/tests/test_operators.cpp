#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "spinspec/closedform.hpp"
#include "spinspec/errors.hpp"
#include "spinspec/operators.hpp"

using namespace spinspec;

namespace {
Rational half(int p) { return make_rational(p, 2); }
}  // namespace

TEST_CASE("dirac spectrum") {
  CHECK(dirac_eig(3, 0, +1) == half(3));
  CHECK(dirac_eig(5, 0, -1) == half(-5));
  CHECK(dirac_eig(3, 2, +1) == half(7));

  // The Dirac operator is (n/2) times the order-1 spectral function.
  for (int n : {3, 5, 7, 9}) {
    for (int j = 0; j <= 10; ++j) {
      for (int eps : {+1, -1}) {
        CHECK(dirac_eig(n, j, eps) ==
              make_rational(n, 2) * z_case1(n, half(1), j, eps));
      }
    }
  }
  CHECK_THROWS_AS(dirac_eig(4, 0, +1), std::invalid_argument);
  CHECK_THROWS_AS(dirac_eig(3, 0, 2), std::invalid_argument);
}

TEST_CASE("odd-power dirac factorization") {
  for (int j = 0; j <= 4; ++j) {
    CHECK(d_odd_eig(5, 0, j, -1) == dirac_eig(5, j, -1));
  }
  CHECK(d_odd_eig(3, 1, 1, -1) == make_rational(-105, 8));
  CHECK(d_odd_eig(3, 1, 0, +1) == make_rational(15, 8));

  // Against the order-3 spectral function the ratio is one constant.
  Rational c = d_odd_eig(3, 1, 0, +1);  // z is 1 at the base K-type
  for (int j = 0; j <= 8; ++j) {
    for (int eps : {+1, -1}) {
      CHECK(d_odd_eig(3, 1, j, eps) == c * z_case1(3, half(3), j, eps));
    }
  }
  CHECK_THROWS_AS(d_odd_eig(3, -1, 0, +1), std::invalid_argument);
}

TEST_CASE("first-order operator on k-form spinors") {
  CHECK(p_k_eig(5, 1, 0, 1, +1) == half(35));
  CHECK(p_k_eig(5, 1, 0, 0, +1) == half(21));
  CHECK(p_k_eig(5, 1, 0, 1, -1) == half(-35));

  CHECK(a_k0_eig(5, 1, 0, 1, +1) == half(7));
  CHECK(a_k0_eig(5, 1, 0, 0, +1) == make_rational(21, 10));

  SUBCASE("normalization relation and spectral ratio") {
    for (int n : {5, 7, 9}) {
      for (int k = 1; k <= (n - 1) / 2; ++k) {
        for (int j = 0; j <= 5; ++j) {
          for (int q = 0; q <= 1; ++q) {
            for (int eps : {+1, -1}) {
              CHECK(p_k_eig(n, k, j, q, eps) ==
                    (n - 2 * k + 2) * a_k0_eig(n, k, j, q, eps));
              // ratio to Z of order 1 is (n + 2)/2, independent of j, q, eps
              CHECK(a_k0_eig(n, k, j, q, eps) ==
                    half(n + 2) * z_case2(n, k, half(1), j, q, eps));
            }
          }
        }
      }
    }
  }
  SUBCASE("spinor bundle is rejected") {
    CHECK_THROWS_WITH_AS(a_k0_eig(5, 0, 0, 1, +1), doctest::Contains("Dirac"),
                         std::invalid_argument);
    CHECK_THROWS_AS(p_k_eig(5, 0, 0, 1, +1), std::invalid_argument);
  }
}

TEST_CASE("second-order pieces") {
  CHECK(tt_star_eig(5, 1, 0, 1) == 0);
  CHECK(tt_star_eig(5, 1, 0, 0) == make_rational(24, 5));
  CHECK(tt_star_eig(5, 1, 1, 0) == make_rational(56, 5));

  CHECK(gstar_g_eig(5, 1, 0, 1) == 0);
  CHECK(gstar_g_eig(5, 1, 0, 0) == make_rational(6, 5));

  CHECK(t_star_t_eig(5, 1, 0, 0) == 0);
  CHECK(t_star_t_eig(5, 1, 2, 1) == tt_star_eig(5, 1, 2, 0));

  SUBCASE("the TT*/G*G ratio is a j-independent constant") {
    // Both scalars carry the same L^2 - (n/2 - k + 1)^2, so their ratio
    // (n-2k+1)(n-k+2) / (k (n-2k+3)) pins each one against the other.
    for (int n : {5, 7, 9}) {
      for (int k = 1; k <= (n - 1) / 2; ++k) {
        Rational expect = make_rational((n - 2 * k + 1) * (n - k + 2),
                                        k * (n - 2 * k + 3));
        for (int j = 0; j <= 6; ++j) {
          CHECK(tt_star_eig(n, k, j, 0) == expect * gstar_g_eig(n, k, j, 0));
        }
      }
    }
    CHECK(tt_star_eig(5, 1, 0, 0) == 4 * gstar_g_eig(5, 1, 0, 0));
  }
}

TEST_CASE("correction coefficients") {
  CHECK(a_l_coeff(5, 1, 1) == make_rational(-16, 105));
  CHECK(a_l_coeff(7, 1, 1) == make_rational(-16, 315));
  CHECK(a_l_coeff(5, 2, 1) == make_rational(-32, 15));
  CHECK(a_l_coeff(5, 1, 2) == make_rational(-64, 45));
  CHECK_THROWS_AS(a_l_coeff(5, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(a_l_coeff(5, 0, 1), std::invalid_argument);
}

TEST_CASE("shifted quadratic factors") {
  CHECK(a_kl_eig(5, 1, 1, 0, 1) == make_rational(45, 4));
  CHECK(a_kl_eig(5, 1, 1, 0, 0) == make_rational(75, 28));
  CHECK_THROWS_AS(a_kl_eig(5, 1, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(a_kl_eig(5, 0, 1, 0, 1), std::invalid_argument);

  SUBCASE("combination and closed scalar stay glued over a grid") {
    // a_kl_eig cross-checks its two derivations internally, so a plain
    // sweep is already a strong test; also record that the q = 0 scalar
    // never vanishes (L is half-odd, l is an integer).
    for (int n : {5, 7, 9}) {
      for (int k = 1; k <= (n - 1) / 2; ++k) {
        for (int l = 1; l <= 4; ++l) {
          for (int j = 0; j <= 6; ++j) {
            CHECK_NOTHROW(a_kl_eig(n, k, l, j, 1));
            CHECK(a_kl_eig(n, k, l, j, 0) != 0);
          }
        }
      }
    }
  }
}

TEST_CASE("odd-order product operator") {
  CHECK(product_eig(5, 1, 1, 0, 1, +1) == make_rational(315, 8));
  CHECK(product_eig(5, 1, 1, 0, 0, +1) == make_rational(45, 8));
  CHECK(product_eig(5, 1, 1, 0, 1, -1) == make_rational(-315, 8));

  SUBCASE("l = 0 degenerates to the first-order operator") {
    for (int q = 0; q <= 1; ++q) {
      for (int j = 0; j <= 3; ++j) {
        CHECK(product_eig(7, 2, 0, j, q, +1) == a_k0_eig(7, 2, j, q, +1));
      }
    }
  }
  SUBCASE("q = 0 and q = 1 spectra differ by the telescoped prefactor") {
    for (int n : {5, 7, 9}) {
      for (int k = 1; k <= (n - 1) / 2; ++k) {
        for (int l = 0; l <= 3; ++l) {
          Rational expect =
              make_rational(n - 2 * k - 2 * l, n - 2 * k + 2 + 2 * l);
          // the same ratio the spectral function of order 2l + 1 shows
          CHECK(expect == z_case2(n, k, half(2 * l + 1), 0, 0, +1) /
                              z_case2(n, k, half(2 * l + 1), 0, 1, +1));
          for (int j = 0; j <= 4; ++j) {
            CHECK(product_eig(n, k, l, j, 0, +1) ==
                  expect * product_eig(n, k, l, j, 1, +1));
          }
        }
      }
    }
  }
}

TEST_CASE("full-grid verification of the intertwinors") {
  VerificationReport dirac3 = verify_intertwinor(3, 0, 1, 20);
  CHECK(dirac3.passed());
  CHECK(dirac3.constant == make_rational(15, 8));
  CHECK(dirac3.grid_size == 42);
  CHECK(dirac3.failures.empty());

  VerificationReport rs = verify_intertwinor(5, 1, 1, 20);
  CHECK(rs.passed());
  CHECK(rs.constant == make_rational(315, 8));
  CHECK(rs.grid_size == 84);

  VerificationReport forms = verify_intertwinor(5, 2, 1, 10);
  CHECK(forms.passed());
  CHECK(forms.constant == make_rational(315, 8));  // depends only on (n, l)
  CHECK(forms.grid_size == 44);

  SUBCASE("constants match the base-point operator value") {
    for (int n : {3, 5, 7}) {
      for (int k = 0; k <= (n - 1) / 2; ++k) {
        for (int l = 0; l <= 3; ++l) {
          VerificationReport rep = verify_intertwinor(n, k, l, 12);
          CHECK(rep.passed());
          Rational base = k == 0 ? d_odd_eig(n, l, 0, +1)
                                 : product_eig(n, k, l, 0, 1, +1);
          CHECK(rep.constant == base);
        }
      }
    }
  }
}
