#include "ffcalc/identities.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ffcalc;

namespace {

IdentitySpec toy(std::function<Rational(const Params&)> lhs, std::function<Rational(const Params&)> rhs) {
  IdentitySpec s;
  s.id = "EQ0";
  s.statement = "toy";
  s.axes = {Axis{"n", bounds::value(0), bounds::scale()}, Axis{"k", bounds::value(0), bounds::of("n")}};
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

}  // namespace

TEST(IdentityCatalog, SizeAndUniqueIds) {
  const auto catalog = identity_catalog();
  EXPECT_GE(catalog.size(), 30u);
  std::set<std::string> ids;
  for (const auto& spec : catalog) {
    EXPECT_TRUE(ids.insert(spec.id).second) << spec.id;
    EXPECT_FALSE(spec.statement.empty()) << spec.id;
  }
  for (const char* required : {"EQ17", "EQ21", "EQ36", "EQ53", "EQ68", "EQ72", "EQ89", "EQ93", "EQ101", "EQ112"}) {
    EXPECT_TRUE(ids.contains(required)) << required;
  }
}

TEST(IdentityCatalog, CoverageOwnersExist) {
  std::set<std::string> ids;
  for (const auto& spec : identity_catalog()) {
    ids.insert(spec.id);
  }
  std::set<std::string> owners;
  for (const auto& entry : coverage_table) {
    const std::string owner(entry.owner);
    if (owner.starts_with("op:")) {
      continue;
    }
    EXPECT_TRUE(ids.contains(owner)) << "equation " << entry.equation << " -> " << owner;
    owners.insert(owner);
  }
  for (const auto& id : ids) {
    EXPECT_TRUE(owners.contains(id)) << id << " is not referenced by the coverage table";
  }
}

TEST(RunIdentity, CountsGridPoints) {
  const auto report = run_identity(toy([](const Params& p) { return Rational(p["n"] + p["k"]); },
                                       [](const Params& p) { return Rational(p["k"] + p["n"]); }),
                                   4);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked, 15);
  EXPECT_EQ(report.passed, 15);
}

TEST(RunIdentity, RecordsFirstFailure) {
  const auto report = run_identity(toy([](const Params& p) { return Rational(p["n"] * p["k"]); },
                                       [](const Params&) { return Rational(0); }),
                                   3);
  EXPECT_FALSE(report.ok());
  ASSERT_TRUE(report.first_failure.has_value());
  EXPECT_EQ(report.first_failure->params, (Params{{"n", 1}, {"k", 1}}));
  EXPECT_EQ(report.first_failure->lhs, Rational(1));
  EXPECT_EQ(report.first_failure->rhs, Rational(0));
  EXPECT_EQ(report.checked, 10);
  EXPECT_LT(report.passed, report.checked);
}

TEST(RunIdentity, ExceptionsBecomeFailures) {
  const auto report = run_identity(toy([](const Params& p) -> Rational {
                                         if (p["n"] == 2) {
                                           throw std::domain_error("boom");
                                         }
                                         return 0;
                                       },
                                       [](const Params&) { return Rational(0); }),
                                   3);
  ASSERT_TRUE(report.first_failure.has_value());
  EXPECT_EQ(report.first_failure->error, "boom");
  EXPECT_EQ(report.first_failure->params["n"], 2);
}

TEST(RunAll, EveryIdentityPassesAtModerateScale) {
  const auto reports = run_all(6);
  ASSERT_EQ(reports.size(), identity_catalog().size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.id << " " << r.passed << "/" << r.checked;
    EXPECT_GT(r.checked, 0) << r.id;
  }
}

TEST(RunAll, DegenerateScalePasses) {
  for (const auto& r : run_all(0)) {
    EXPECT_TRUE(r.ok()) << r.id;
  }
}

TEST(RunAll, FilterAndOrdering) {
  const auto reports = run_all(4, {"EQ101", "EQ72", "EQ9"});
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].id, "EQ9");
  EXPECT_EQ(reports[1].id, "EQ72");
  EXPECT_EQ(reports[2].id, "EQ101");
  EXPECT_THROW(run_all(4, {"EQ999"}), std::invalid_argument);
}

TEST(SpotValues, HarmonicRowSums) {
  // n = 2, m = 1: sum_l H_{3,l,1} = 1 + 5/6 + 1/6 = 2 = (3+1)/(1+1).
  Rational sum = 0;
  Rational alternating = 0;
  for (int l = 0; l <= 2; ++l) {
    sum += esh(3, l, 1);
    alternating += esh(3, l, 1) * power(Rational(-1), l);
  }
  EXPECT_EQ(sum, 2);
  EXPECT_EQ(alternating, Rational(1, 3));
  EXPECT_EQ(alternating, Rational(1) / Rational(binomial(3, 2)));
}

TEST(SpotValues, ShiftedFirstKindRow) {
  // sum_k C(k,1) s(4,k+1) 3^(k-1) over k = 1..3 gives 11 - 36 + 27 = 2 = |s(3,1)|.
  Rational sum = 0;
  for (int k = 1; k <= 3; ++k) {
    sum += Rational(binomial(k, 1)) * stirling1(4, k + 1) * power(Rational(3), k - 1);
  }
  EXPECT_EQ(sum, absolute(stirling1(3, 1)));
}
