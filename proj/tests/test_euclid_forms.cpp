#include "flagbound/euclid_forms.hpp"

#include <gtest/gtest.h>

#include "flagbound/errors.hpp"

using namespace flagbound;

TEST(SplitMEpsilon, Examples) {
  auto f = split_m_epsilon(31, 5);
  EXPECT_EQ(f.quotient, 6);
  EXPECT_EQ(f.remainder, 0);
  f = split_m_epsilon(6, 2);
  EXPECT_EQ(f.quotient, 2);
  EXPECT_EQ(f.remainder, 1);
  f = split_m_epsilon(1000, 10);
  EXPECT_EQ(f.quotient, 99);
  EXPECT_EQ(f.remainder, 9);
  EXPECT_EQ(f.dividendLabel, DividendLabel::degree_d);
  EXPECT_EQ(f.dividend(), 1000);
}

TEST(SplitMEpsilon, RejectsNonPositive) {
  EXPECT_THROW(split_m_epsilon(0, 5), ValidationError);
  EXPECT_THROW(split_m_epsilon(5, 0), ValidationError);
}

TEST(SplitWV, Examples) {
  auto f = split_w_v(7, 5);
  EXPECT_EQ(f.quotient, 2);
  EXPECT_EQ(f.remainder, 0);
  f = split_w_v(3, 4);
  EXPECT_EQ(f.quotient, 1);
  EXPECT_EQ(f.remainder, 0);
  f = split_w_v(5, 3);
  EXPECT_EQ(f.quotient, 4);
  EXPECT_EQ(f.remainder, 0);
  EXPECT_EQ(f.modulus, 1);
  EXPECT_EQ(f.dividendLabel, DividendLabel::degree_s);
  EXPECT_THROW(split_w_v(5, 2), ValidationError);
}

TEST(DivisionForm, ReconstructsDividend) {
  for (long dividend = 1; dividend <= 400; ++dividend) {
    for (long modulus = 1; modulus <= 30; ++modulus) {
      const auto f = split_m_epsilon(dividend, modulus);
      EXPECT_EQ(f.quotient * modulus + f.remainder, dividend - 1);
      EXPECT_GE(f.remainder, 0);
      EXPECT_LT(f.remainder, modulus);
    }
    for (long r = 3; r <= 12; ++r) {
      const auto f = split_w_v(dividend, r);
      EXPECT_EQ(f.quotient * (r - 2) + f.remainder, dividend - 1);
      EXPECT_LE(f.remainder, r - 3);
    }
  }
}

TEST(DivisionForm, HandlesHugeDividends) {
  const Integer d("1000000000000000000000000000001");
  const auto f = split_m_epsilon(d, 7);
  EXPECT_EQ(f.dividend(), d);
  EXPECT_LT(f.remainder, 7);
}
