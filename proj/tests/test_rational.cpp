#include <gtest/gtest.h>

#include <stdexcept>

#include "jordanaff/rational.hpp"

using jordanaff::Rational;

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("-6/-4").str(), "3/2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST(Rational, StringRoundTrip) {
  for (const char* s : {"0", "1", "-1", "1/3", "-22/7", "123456789012345678901234567891/2"})
    EXPECT_EQ(Rational::parse(s).str(), s);
}

TEST(Rational, SpillsToBigAndDemotes) {
  Rational big(std::int64_t{1} << 62);
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.str(), "21267647932558653966460912964485513216");
  const Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
}

TEST(Rational, FieldAxiomsOnSmallGrid) {
  for (int a = -4; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = -3; c <= 3; ++c) {
        const Rational x(a, b), y(c, b + 1), z(b, 5);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) - y, x);
        if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
      }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_DOUBLE_EQ(Rational(-3, 8).to_double(), -0.375);
}
