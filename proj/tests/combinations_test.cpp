#include "ffcalc/combinations.hpp"
#include "ffcalc/symmetric.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ffcalc;

namespace {

std::vector<MissingFactorSet> collect(int n, int l) {
  std::vector<MissingFactorSet> out;
  for (const auto& s : enumerate_subsets(n, l)) {
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(MissingFactorSet, Validation) {
  EXPECT_THROW(MissingFactorSet(3, {3}), std::domain_error);
  EXPECT_THROW(MissingFactorSet(3, {-1}), std::domain_error);
  EXPECT_THROW(MissingFactorSet(5, {2, 2}), std::domain_error);
  EXPECT_THROW(MissingFactorSet(5, {3, 1}), std::domain_error);
  EXPECT_THROW(MissingFactorSet(-1, {}), std::domain_error);
  const MissingFactorSet s(5, {0, 2, 4});
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
  EXPECT_EQ(s.prefix(2), MissingFactorSet(5, {0, 2}));
  EXPECT_EQ(s.in_universe(6).universe(), 6);
  EXPECT_EQ(to_string(s), "<0,2,4>");
  EXPECT_EQ(to_string(MissingFactorSet(3, {})), "<>");
}

TEST(EnumerateSubsets, FiveChooseThreeListing) {
  const std::vector<std::vector<int>> expected{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
                                               {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  const auto got = collect(5, 3);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i], MissingFactorSet(5, expected[i])) << i;
  }
}

TEST(EnumerateSubsets, EdgeCases) {
  EXPECT_EQ(collect(4, 0).size(), 1u);
  EXPECT_TRUE(collect(4, 0).front().empty());
  EXPECT_EQ(collect(0, 0).size(), 1u);
  ASSERT_EQ(collect(4, 4).size(), 1u);
  EXPECT_EQ(collect(4, 4).front(), MissingFactorSet(4, {0, 1, 2, 3}));
  EXPECT_THROW(collect(3, 4), std::domain_error);
}

TEST(EnumerateSubsets, MatchesRecursiveOracleAndCounts) {
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      const auto got = collect(n, l);
      const auto want = oracle::recursive_subsets(n, l);
      ASSERT_EQ(Integer(got.size()), binomial(n, l));
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        ASSERT_EQ(got[i], MissingFactorSet(n, want[i]));
        if (i > 0) {
          ASSERT_LT(rank_value(got[i - 1]), rank_value(got[i]));
        }
      }
    }
  }
}

TEST(RankValue, Examples) {
  EXPECT_EQ(rank_value(MissingFactorSet(5, {0, 1, 2})), 7);
  EXPECT_EQ(rank_value(MissingFactorSet(5, {2, 3, 4})), 69);
  EXPECT_EQ(rank_value(MissingFactorSet(9, {})), 0);
}

TEST(SymmetricPolynomials, AgreeWithBruteForce) {
  const std::vector<std::vector<Rational>> samples{oracle::integers(1, 6), oracle::reciprocals(2, 7),
                                                   {Rational(-3, 2), Rational(5), Rational(0), Rational(2, 7)}, {}};
  for (const auto& values : samples) {
    for (int k = -1; k <= 7; ++k) {
      EXPECT_EQ(elementary_symmetric(k, values), oracle::brute_elementary(k, values));
      if (k >= 0) {
        EXPECT_EQ(complete_homogeneous(k, values), oracle::brute_homogeneous(k, values));
      }
    }
  }
  EXPECT_EQ(complete_homogeneous(2, {Rational(1), Rational(2)}), 7);
  EXPECT_EQ(complete_homogeneous(1, {Rational(1), Rational(1, 2)}), Rational(3, 2));
  EXPECT_EQ(complete_homogeneous(0, {Rational(9)}), 1);
}
