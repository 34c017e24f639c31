#include "ffcalc/numeric.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ffcalc;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(12), Integer(479001600));
  EXPECT_EQ(factorial(12), oracle::product_factorial(12));
  EXPECT_EQ(factorial(25), oracle::product_factorial(25));
}

TEST(Factorial, RejectsNegative) { EXPECT_THROW(factorial(-1), std::domain_error); }

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(12, 6), 924);
  EXPECT_EQ(oracle::pascal_row(12)[6], 924);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  for (int n = 0; n <= 30; ++n) {
    const auto row = oracle::pascal_row(n);
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), row[static_cast<std::size_t>(k)]) << n << "," << k;
      if (k >= 1 && n >= 1) {
        ASSERT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
      }
    }
  }
}

TEST(FallingPower, Examples) {
  EXPECT_EQ(falling_power(3, 3), 6);
  EXPECT_EQ(falling_power(Rational(1, 2), 2), Rational(-1, 4));
  EXPECT_EQ(falling_power(-2, 3), -24);
  EXPECT_EQ(falling_power(Rational(7, 3), 0), 1);
}

TEST(FallingPower, StepRecurrence) {
  for (int num = -12; num <= 12; ++num) {
    for (int den : {1, 2, 3, 7}) {
      const Rational x(num, den);
      for (int n = 0; n < 12; ++n) {
        ASSERT_EQ(falling_power(x, n + 1), falling_power(x, n) * (x - n));
      }
    }
  }
}

TEST(KroneckerDelta, Values) {
  EXPECT_EQ(kronecker_delta(0), 1);
  EXPECT_EQ(kronecker_delta(1), 0);
  EXPECT_EQ(kronecker_delta(7), 0);
}

TEST(Power, SignedExponents) {
  EXPECT_EQ(power(Rational(2), 10), 1024);
  EXPECT_EQ(power(Rational(2), -3), Rational(1, 8));
  EXPECT_EQ(power(Rational(-3, 2), 3), Rational(-27, 8));
  EXPECT_EQ(power(Rational(0), 0), 1);
  EXPECT_THROW(power(Rational(0), -1), std::domain_error);
  EXPECT_EQ(minus_one_pow(-3), -1);
  EXPECT_EQ(minus_one_pow(-4), 1);
}

TEST(Rational, CanonicalAfterArithmetic) {
  std::mt19937 rng(20140112);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    int d1 = dist(rng);
    int d2 = dist(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = -1;
    const Rational a = make_rational(dist(rng), d1);
    const Rational b = make_rational(dist(rng), d2);
    for (const Rational& r : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
      ASSERT_GT(denominator(r), 0);
      ASSERT_EQ(gcd(numerator(r), denominator(r)) == 1 || numerator(r) == 0, true);
    }
  }
}

TEST(RationalText, ExactFormatRoundTrips) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-100000, 100000);
  for (int trial = 0; trial < 500; ++trial) {
    int den = dist(rng);
    if (den == 0) den = 3;
    const Rational x = make_rational(dist(rng), den);
    ASSERT_EQ(parse_rational(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(to_string(Rational(12)), "12");
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(make_rational(6, -8)), "-3/4");
}

TEST(RationalText, ParsesDecimals) {
  EXPECT_EQ(parse_rational("-0.75"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("1.39e-3"), Rational(139, 100000));
  EXPECT_EQ(parse_rational("0.120"), Rational(3, 25));
  EXPECT_EQ(parse_rational("+5"), 5);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/"), std::invalid_argument);
}

TEST(Decimal, ThreeSignificantFigures) {
  EXPECT_EQ(to_decimal(Rational(1, 720)), "1.39e-3");
  EXPECT_EQ(to_decimal(Rational(-3, 4)), "-0.750");
  EXPECT_EQ(to_decimal(Rational(1, 6)), "0.167");
  EXPECT_EQ(to_decimal(Rational(-15, 16)), "-0.938");
  EXPECT_EQ(to_decimal(Rational(3, 25)), "0.120");
  EXPECT_EQ(to_decimal(Rational(1, 24)), "4.17e-2");
  EXPECT_EQ(to_decimal(Rational(3, 2)), "1.50");
  EXPECT_EQ(to_decimal(Rational(247, 2)), "124");
  EXPECT_EQ(to_decimal(Rational(12345, 2)), "6.17e3");
  EXPECT_EQ(to_decimal(Rational(-36)), "-36");
  EXPECT_EQ(to_decimal(Rational(0)), "0");
  // 0.09995 rounds up into the next decade
  EXPECT_EQ(to_decimal(Rational(1999, 20000)), "0.100");
  EXPECT_EQ(to_decimal(Rational(1, 3), 5), "0.33333");
}
