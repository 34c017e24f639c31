#include "ffcalc/derivative.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ffcalc;

TEST(DerivPolySymbolic, Examples) {
  EXPECT_EQ(deriv_poly_symbolic(3, 2), Poly({Rational(-6), Rational(6)}));
  EXPECT_TRUE(deriv_poly_symbolic(2, 5).is_zero());
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(deriv_poly_symbolic(n, 0), falling_factorial_poly(n));
  }
}

TEST(DerivPolySymbolic, MatchesTermwiseDifferentiation) {
  for (int n = 0; n <= 10; ++n) {
    for (int l = 0; l <= n + 1; ++l) {
      ASSERT_EQ(deriv_poly_symbolic(n, l), deriv_poly_oracle(n, l)) << n << "," << l;
    }
  }
}

TEST(DerivAt, Examples) {
  EXPECT_EQ(deriv_at({3, 2, 3, Route::harmonic}), 12);
  EXPECT_EQ(deriv_at({3, 1, 1, Route::harmonic}), -1);
  EXPECT_EQ(deriv_at({3, 2, 3, Route::stirling}), 12);
  EXPECT_EQ(deriv_at({2, 1, 3, Route::oracle}), 5);
  for (int n = 0; n <= 8; ++n) {
    for (int m = -4; m <= 8; ++m) {
      EXPECT_EQ(deriv_at({n, n, m, Route::stirling}), Rational(factorial(n)));
    }
  }
}

TEST(DerivAt, RoutesAgreeOnSmallGrid) {
  for (int n = 0; n <= 7; ++n) {
    for (int l = 0; l <= n + 2; ++l) {
      for (int m = -4; m <= 10; ++m) {
        const Rational expected = deriv_oracle(n, l, m);
        for (Route r : all_routes) {
          ASSERT_EQ(deriv_at({n, l, m, r}), expected) << n << "," << l << "," << m << " " << to_string(r);
        }
      }
    }
  }
}

TEST(DerivAt, RationalPointsViaPolynomialRoutes) {
  for (int n = 0; n <= 6; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int num = -7; num <= 7; num += 2) {
        const Rational x(num, 4);
        EXPECT_EQ(deriv_symbolic(n, l, x), deriv_oracle(n, l, x));
        EXPECT_EQ(forms::harmonic_direct(n, l, x), deriv_oracle(n, l, x));
      }
    }
  }
}

TEST(DerivForms, RegionalFormsAgreeWithOracle) {
  for (int n = 0; n <= 8; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int m = -3; m <= 12; ++m) {
        const Rational expected = deriv_oracle(n, l, m);
        ASSERT_EQ(forms::stirling_unified(n, l, m), expected);
        ASSERT_EQ(forms::stirling_unified_alt(n, l, m), expected);
        ASSERT_EQ(deriv_at({n, l, m, Route::stirling}), (n - l) % 2 == 0 ? deriv_at({n, l, n - m - 1, Route::oracle})
                                                                           : -deriv_at({n, l, n - m - 1, Route::oracle}));
        if (m >= n) {
          ASSERT_EQ(forms::harmonic_outer(n, l, m), expected);
          ASSERT_EQ(forms::stirling_outer(n, l, m), expected);
          ASSERT_EQ(r_stirling_form(n, l, m), expected);
        }
        if (2 * m >= n - 1 && m < n) {
          ASSERT_EQ(forms::harmonic_inner(n, l, m), expected);
          ASSERT_EQ(forms::stirling_inner(n, l, m), expected);
          ASSERT_EQ(forms::paired_expansion(n, l, m), expected);
        }
      }
    }
  }
}

TEST(NoncentralStirling, Examples) {
  EXPECT_EQ(noncentral_stirling(3, 2, 3), 6);
  EXPECT_EQ(noncentral_stirling(2, 4, 7), 0);
  for (int n = 0; n <= 6; ++n) {
    for (int m = -3; m <= 6; ++m) {
      EXPECT_EQ(noncentral_stirling(n, 0, m), falling_power(Rational(m), n));
    }
  }
}

TEST(RStirlingForm, Examples) {
  EXPECT_EQ(r_stirling_form(3, 2, 3), 12);
  EXPECT_EQ(r_stirling_form(3, 1, 4), 26);
  EXPECT_EQ(r_stirling_form(4, 0, 6), falling_power(Rational(6), 4));
  EXPECT_THROW(r_stirling_form(3, 1, 2), std::domain_error);
}

TEST(TaylorTranslate, Examples) {
  EXPECT_EQ(taylor_translate(3, 1, 0, 1), -1);
  EXPECT_EQ(taylor_translate(3, 0, 3, 0), 0);
  for (int n = 0; n <= 6; ++n) {
    for (int lp = 0; lp <= n; ++lp) {
      for (int m = -3; m <= 5; ++m) {
        EXPECT_EQ(taylor_translate(n, lp, m, m), deriv_at({n, lp, m, Route::oracle}));
        EXPECT_EQ(taylor_translate(n, lp, m, m + 3), deriv_at({n, lp, m + 3, Route::oracle}));
      }
    }
  }
}

TEST(Route, NamesRoundTrip) {
  for (Route r : all_routes) {
    EXPECT_EQ(parse_route(to_string(r)), r);
  }
  EXPECT_EQ(parse_route("bogus"), std::nullopt);
}
