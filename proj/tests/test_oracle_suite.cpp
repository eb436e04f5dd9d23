#include "flagbound/oracle_suite.hpp"

#include <random>

#include <gtest/gtest.h>

#include "flagbound/errors.hpp"
#include "oracles.hpp"

using namespace flagbound;

TEST(PointDeficiencySum, Examples) {
  EXPECT_EQ(oracle_point_deficiency_sum(5, 7), 3);
  EXPECT_EQ(oracle_point_deficiency_sum(4, 3), 0);
  EXPECT_EQ(oracle_point_deficiency_sum(3, 5), 6);
  EXPECT_THROW(oracle_point_deficiency_sum(5, 3), ValidationError);
  EXPECT_THROW(oracle_point_deficiency_sum(2, 3), ValidationError);
}

TEST(WeightedDeficiencySum, Examples) {
  EXPECT_EQ(oracle_weighted_deficiency_sum(5, 7), 0);
  EXPECT_EQ(oracle_weighted_deficiency_sum(3, 5), 4);
  EXPECT_EQ(oracle_weighted_deficiency_sum(4, 9), 8);
}

TEST(DeficiencySums, MatchReferenceLoops) {
  for (long r = 3; r <= 10; ++r) {
    for (std::int64_t s = r - 1; s <= 200; ++s) {
      ASSERT_EQ(oracle_point_deficiency_sum(r, s), reference::deficiency_sum(r - 2, s));
      ASSERT_EQ(oracle_weighted_deficiency_sum(r, s), reference::weighted_deficiency_sum(r - 2, s));
    }
  }
}

TEST(LemmaChain, WorkedExample) {
  LemmaInput input;
  input.r = 5;
  input.s = 7;
  input.d = 50;
  input.pointProfile = HilbertProfile::extremal(3, 7);
  const auto check = oracle_lemma_chain(input);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.lhs, 168);
  EXPECT_EQ(check.rhs, Rational(168));
}

TEST(LemmaChain, RandomInputs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto check = oracle_lemma_chain(random_admissible_input(rng));
    ASSERT_TRUE(check.holds) << check.diff;
  }
}

TEST(LemmaChain, PreconditionGuard) {
  LemmaInput input;
  input.r = 5;
  input.s = 7;
  input.d = 15;  // m = 2 < w + 1 = 3
  input.pointProfile = HilbertProfile::extremal(3, 7);
  EXPECT_THROW(oracle_lemma_chain(input), HypothesisFailure);
}

TEST(LemmaChain, ReportsMismatchWhenTruncationFails) {
  // m = 2 >= w + 1 and >= s-r+2, but the profile saturates only at index 6.
  LemmaInput input;
  input.r = 8;
  input.s = 7;
  input.d = 15;
  input.pointProfile = HilbertProfile(7, {1, 2, 3, 4, 5, 6, 7});
  const auto check = oracle_lemma_chain(input);
  EXPECT_FALSE(check.holds);
  EXPECT_FALSE(check.diff.empty());
}

TEST(EnvelopeScan, SmallestGrid) {
  const auto report = oracle_envelope_scan(4, 3);
  EXPECT_EQ(report.cases, 1u);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.tightestRatio, Rational(Integer(79), Integer(108)));
  EXPECT_EQ(report.tightestAt.r, 4);
  EXPECT_EQ(report.tightestAt.s, 3);
}

TEST(EnvelopeScan, FullGrid) {
  const auto report = oracle_envelope_scan(10, 200);
  EXPECT_TRUE(report.passed());
  EXPECT_LT(report.tightestRatio, Rational(1));
  EXPECT_THROW(oracle_envelope_scan(3, 10), ValidationError);
}

TEST(RandomAdmissibleInput, RespectsInvariants) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto input = random_admissible_input(rng);
    EXPECT_NO_THROW(validate_lemma_input(input));
    for (std::int64_t i = 0; i <= input.pointProfile.saturation_index(); ++i) {
      EXPECT_GE(input.pointProfile.at(i), std::min<std::int64_t>(input.s, i * (input.r - 2) + 1));
    }
  }
}

TEST(RunVerification, SmallGridPasses) {
  const auto rows = run_verification({.rMax = 6, .sMax = 60, .seeds = 100, .seed = 1});
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_TRUE(row.passed()) << row.name << ": " << row.detail;
    EXPECT_GT(row.cases, 0u) << row.name;
  }
}
