#include "flagbound/hypothesis_checker.hpp"

#include <random>

#include <gtest/gtest.h>

#include "flagbound/errors.hpp"
#include "oracles.hpp"

using namespace flagbound;

namespace {

const HypothesisCheck& find(const HypothesisReport& report, const std::string& label, std::size_t index = 1) {
  for (const auto& check : report.checks) {
    if (check.label == label && (report.subject != HypothesisSubject::flagSeparation || check.index == index)) {
      return check;
    }
  }
  throw std::runtime_error("no check " + label);
}

}  // namespace

TEST(FlagSeparation, QuarticCheck) {
  const auto weak = check_flag_separation(FlagCondition(5, {1000, 10}));
  EXPECT_EQ(find(weak, "quartic separation").verdict, Verdict::fail);
  EXPECT_EQ(std::get<Rational>(find(weak, "quartic separation").threshold), Rational(Integer(20000), Integer(3)));
  EXPECT_EQ(weak.overall(), Verdict::fail);
  const auto strong = check_flag_separation(FlagCondition(5, {1000000, 10}));
  EXPECT_EQ(find(strong, "quartic separation").verdict, Verdict::pass);
  EXPECT_EQ(strong.overall(), Verdict::pass);
  EXPECT_EQ(strong.checks.size(), 4u);
}

TEST(FlagSeparation, ThresholdsForWorkedFlag) {
  const auto report = check_flag_separation(FlagCondition(5, {1000000, 10}));
  // 8 (l-1) [(l-i+1)^2 + 2(l-i+1) + 9] (s2+1)^3 / (r-i-1) with l = 2, i = 1, r = 5.
  EXPECT_EQ(std::get<Rational>(find(report, "cubic separation").threshold), Rational(Integer(181016), Integer(3)));
  EXPECT_EQ(find(report, "cubic separation").relation, ">=");
  EXPECT_EQ(std::get<Rational>(find(report, "quadratic separation").threshold), Rational(Integer(385), Integer(3)));
  EXPECT_EQ(threshold_expression(find(report, "radical separation").threshold), "22/3 * 264^(1/3) * 264^(1/2) * 264");
}

TEST(FlagSeparation, CubicCheckIsNonStrict) {
  // Pick s1 exactly on the cubic threshold of (6; s1, 5, 4): i = 1, l = 3, k = 4:
  // 8*2*(9+6+9)*216/4 = 20736.
  const auto report = check_flag_separation(FlagCondition(6, {20736, 5, 4}));
  const auto& check = find(report, "cubic separation", 1);
  EXPECT_EQ(std::get<Rational>(check.threshold), Rational(20736));
  EXPECT_EQ(check.verdict, Verdict::pass);
  const auto below = check_flag_separation(FlagCondition(6, {20735, 5, 4}));
  EXPECT_EQ(find(below, "cubic separation", 1).verdict, Verdict::fail);
}

TEST(FlagSeparation, RequiresTwoDegrees) {
  EXPECT_THROW(check_flag_separation(FlagCondition(5, {1000})), ValidationError);
}

TEST(FlagSeparation, MonotoneInLeadingDegree) {
  const Integer start("2000000");
  ASSERT_TRUE(check_flag_separation(FlagCondition(5, {start, 10})).passed());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Integer bigger = start + std::uniform_int_distribution<long>(0, 1'000'000'000)(rng);
    EXPECT_TRUE(check_flag_separation(FlagCondition(5, {bigger, 10})).passed());
  }
}

TEST(CorollaryDegree, BoundaryPair) {
  const auto pass = check_corollary_degree(4, 471, 3);
  EXPECT_EQ(threshold_expression(pass.checks[0].threshold), "4 * 24^(1/2) * 24");
  EXPECT_EQ(pass.checks[0].verdict, Verdict::pass);
  EXPECT_EQ(pass.checks[1].verdict, Verdict::pass);
  EXPECT_EQ(std::get<Rational>(pass.checks[1].threshold), Rational(192));
  EXPECT_EQ(pass.overall(), Verdict::pass);

  const auto fail = check_corollary_degree(4, 470, 3);
  EXPECT_EQ(fail.checks[0].verdict, Verdict::fail);
  EXPECT_EQ(fail.overall(), Verdict::fail);

  const auto mixed = check_corollary_degree(4, 200, 3);
  EXPECT_EQ(mixed.checks[0].verdict, Verdict::fail);
  EXPECT_EQ(mixed.checks[1].verdict, Verdict::pass);
  EXPECT_EQ(mixed.overall(), Verdict::fail);
  EXPECT_THROW(check_corollary_degree(4, 471, 2), ValidationError);
}

TEST(CorollaryDegree, ApproximationIsDisplayedSeparately) {
  const auto report = check_corollary_degree(4, 471, 3);
  EXPECT_EQ(threshold_approximation(report.checks[0].threshold, 10), "470.3020306");
}

TEST(LemmaDegree, CaseSplit) {
  EXPECT_EQ(check_lemma_degree(4, 9, 3).overall(), Verdict::pass);
  EXPECT_EQ(check_lemma_degree(3, 11, 3).overall(), Verdict::fail);
  EXPECT_EQ(check_lemma_degree(3, 12, 3).overall(), Verdict::pass);
  EXPECT_EQ(check_lemma_degree(5, 43, 7).overall(), Verdict::pass);
  EXPECT_EQ(check_lemma_degree(5, 42, 7).overall(), Verdict::fail);
  EXPECT_THROW(check_lemma_degree(2, 10, 3), ValidationError);
}

TEST(HypothesisReport, OverallVerdict) {
  HypothesisReport report;
  EXPECT_EQ(report.overall(), Verdict::pass);
  report.checks.push_back({"a", 0, 1, ">", Rational(0), Verdict::pass, true});
  report.checks.push_back({"b", 0, 1, ">", Rational(0), Verdict::undecided, false});
  EXPECT_EQ(report.overall(), Verdict::undecided);
  report.checks.push_back({"c", 0, 1, ">", Rational(0), Verdict::fail, true});
  EXPECT_EQ(report.overall(), Verdict::fail);
}

TEST(HypothesisChecks, BudgetExhaustionIsReported) {
  const auto report = check_corollary_degree(6, 100000, 5, {.digitBudget = 1, .fallbackDigits = 50});
  EXPECT_FALSE(report.checks[0].exact);
  EXPECT_NE(report.checks[0].verdict, Verdict::undecided);
}

TEST(HypothesisChecks, AgreeWithLogDomainEnclosure) {
  std::mt19937_64 rng(17);
  int conclusive = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const long r = std::uniform_int_distribution<long>(3, 9)(rng);
    const long s = std::uniform_int_distribution<long>(r - 1, 60)(rng);
    const auto report = check_corollary_degree(r, 1, s);
    const auto& threshold = std::get<RadicalProduct>(report.checks[0].threshold);
    std::vector<std::pair<mpz_class, unsigned long>> raw;
    for (const auto& f : threshold.factors()) {
      raw.emplace_back(f.base, f.exponentDenominator);
    }
    const std::string approx = threshold.approximate(60);
    const Integer center(approx.substr(0, approx.find('.')));
    const Integer d = center + std::uniform_int_distribution<long>(-2, 2)(rng);
    if (d < 1) {
      continue;
    }
    const auto verdict = check_corollary_degree(r, d, s).checks[0].verdict;
    const auto oracle = reference::log_domain_locate(d, threshold.scalar().raw(), raw);
    if (oracle == reference::Enclosure::above) {
      EXPECT_EQ(verdict, Verdict::pass) << r << " " << s << " " << d;
      ++conclusive;
    } else if (oracle == reference::Enclosure::below) {
      EXPECT_EQ(verdict, Verdict::fail) << r << " " << s << " " << d;
      ++conclusive;
    }
  }
  EXPECT_GT(conclusive, 450);
}
