#include "ffcalc/harmonic.hpp"
#include "ffcalc/stirling.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ffcalc;

TEST(Esh, Examples) {
  EXPECT_EQ(esh(3, 1, 0, 1), Rational(11, 6));
  EXPECT_EQ(esh(5, 2, 3, 1), Rational(1, 20));
  EXPECT_EQ(esh(3, 2, 1, 1), Rational(1, 6));
  EXPECT_EQ(esh(6, -1, 2, 3), 0);
  EXPECT_EQ(esh(4, 3, 2, 1), 0);
  EXPECT_EQ(esh(5, 0, 2, 2), 1);
}

TEST(Esh, MatchesUnrolledSum) {
  for (int v = 1; v <= 3; ++v) {
    for (int n = 0; n <= 10; ++n) {
      for (int r = 0; r <= n; ++r) {
        for (int l = 0; l <= n - r + 1; ++l) {
          ASSERT_EQ(esh(n, l, r, v), oracle::unrolled_esh(n, l, r, v)) << n << "," << l << "," << r << "," << v;
        }
      }
    }
  }
}

TEST(Esh, ElementarySymmetricOfReciprocals) {
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int l = 0; l <= n - r; ++l) {
        ASSERT_EQ(esh(n, l, r, 1), oracle::brute_elementary(l, oracle::reciprocals(r + 1, n)));
      }
    }
  }
}

TEST(Esh, RelationToFirstKindRow) {
  for (int n = 0; n <= 15; ++n) {
    for (int l = 0; l <= n; ++l) {
      ASSERT_EQ(esh(n, l, 0, 1) * Rational(factorial(n)), absolute(stirling1(n + 1, l + 1)));
    }
  }
}

TEST(GeneralizedHarmonic, Values) {
  EXPECT_EQ(generalized_harmonic(3), Rational(11, 6));
  EXPECT_EQ(generalized_harmonic(2, 2), Rational(5, 4));
  EXPECT_EQ(generalized_harmonic(0, 3), 0);
  for (int n = 0; n <= 20; ++n) {
    for (int v = 1; v <= 3; ++v) {
      ASSERT_EQ(generalized_harmonic(n, v), esh(n, 1, 0, v));
    }
  }
}

TEST(EshMatrix, Examples) {
  const auto m = esh_matrix(3, 0, 1);
  EXPECT_EQ(m.at(3, 0), 1);
  EXPECT_EQ(m.at(3, 1), Rational(11, 6));
  EXPECT_EQ(m.at(3, 2), 1);
  EXPECT_EQ(m.at(3, 3), Rational(1, 6));
  EXPECT_EQ(esh_matrix(2, 1, 2).at(2, 1), Rational(1, 4));
}

TEST(EshMatrix, AgreesWithEsh) {
  for (int r = 0; r <= 4; ++r) {
    for (int v = 1; v <= 2; ++v) {
      const auto m = esh_matrix(12, r, v);
      for (int n = 0; n <= 12; ++n) {
        ASSERT_EQ(m.at(n, 0), n >= r ? Rational(1) : Rational(0)) << n << "," << r;
        for (int l = 0; l <= n; ++l) {
          ASSERT_EQ(m.at(n, l), esh(n, l, r, v)) << n << "," << l << "," << r << "," << v;
        }
      }
    }
  }
}

TEST(EshPoly, Examples) {
  EXPECT_EQ(esh_poly_prefactor(2, 1, 1) * evaluate(esh_poly(2, 1, 1), 1), Rational(7, 12));
  EXPECT_EQ(esh_extended(2, 1, 1, 1), Rational(7, 12));
  EXPECT_EQ(esh_poly(4, 4, 2), Poly::constant(esh(6, 4, 2)));
  EXPECT_EQ(esh_extended(2, 0, 0, 0), 1);
  EXPECT_THROW(esh_poly(2, 3, 0), std::domain_error);
  EXPECT_THROW(esh_poly_prefactor(2, 0, -1), std::domain_error);
}

TEST(EshPoly, NaturalShiftMatchesDirectSum) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (int lp = 0; lp <= n; ++lp) {
        for (int r = 0; r <= 4; ++r) {
          ASSERT_EQ(esh_extended(n, lp, m, r), esh(n + m + r, lp, m + r));
        }
      }
    }
  }
}
