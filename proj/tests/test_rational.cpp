#include <gtest/gtest.h>

#include <stdexcept>

#include "icdual/error.hpp"
#include "icdual/rational.hpp"

using icdual::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
  EXPECT_EQ(Rational(4).to_string(), "4/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_THROW((void)Rational::parse("1/0"), icdual::InvalidInput);
  EXPECT_THROW((void)Rational::parse("a/2"), icdual::InvalidInput);
  EXPECT_THROW((void)Rational::parse(""), icdual::InvalidInput);
  EXPECT_THROW((void)Rational::parse("1/2/3"), icdual::InvalidInput);
}

TEST(Rational, OverflowIsDetected) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_EQ(big / big, Rational(1));
}

TEST(Rational, Lcm) {
  EXPECT_EQ(icdual::lcm_checked(4, 6), 12);
  EXPECT_EQ(icdual::lcm_checked(1, 7), 7);
  EXPECT_THROW((void)icdual::lcm_checked(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), std::overflow_error);
}
