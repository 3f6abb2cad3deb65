#include <gtest/gtest.h>

#include "ranklab/errors.hpp"
#include "ranklab/random.hpp"
#include "ranklab/scalar.hpp"
#include "support.hpp"

namespace ranklab {
namespace {

using testing::random_rational;

void expect_fraction(const Scalar& s, const char* num, const char* den) {
  EXPECT_EQ(s.numerator(), mpz_class(num));
  EXPECT_EQ(s.denominator(), mpz_class(den));
  EXPECT_TRUE(s.is_canonical());
}

TEST(ParseScalar, Integers) {
  expect_fraction(parse_scalar("0"), "0", "1");
  expect_fraction(parse_scalar("-17"), "-17", "1");
  expect_fraction(parse_scalar("+42"), "42", "1");
  expect_fraction(parse_scalar("-0"), "0", "1");
}

TEST(ParseScalar, DecimalsAreExact) {
  expect_fraction(parse_scalar("3.25"), "13", "4");
  expect_fraction(parse_scalar("-0.1"), "-1", "10");
  expect_fraction(parse_scalar("2.50"), "5", "2");
  // Would be inexact in binary floating point.
  EXPECT_EQ(parse_scalar("0.1") + parse_scalar("0.2"), parse_scalar("0.3"));
}

TEST(ParseScalar, RatiosReduce) {
  expect_fraction(parse_scalar("-6/4"), "-3", "2");
  expect_fraction(parse_scalar("0/9"), "0", "1");
  expect_fraction(parse_scalar("10/5"), "2", "1");
}

TEST(ParseScalar, HugeValuesStayExact) {
  const Scalar big = parse_scalar("123456789012345678901234567890");
  EXPECT_EQ(big.to_string(), "123456789012345678901234567890");
  EXPECT_EQ((big + 1) - big, Scalar(1));
}

TEST(ParseScalar, RejectsMalformed) {
  for (const char* bad : {"", "-", "+", "abc", "1.", ".5", "1..2", "1/", "/2", "1/-2", "1/2/3", "1.5/2", " 1",
                          "1 ", "0x10", "--1", "1,5"}) {
    EXPECT_THROW(parse_scalar(bad), ParseError) << "'" << bad << "'";
  }
}

TEST(ParseScalar, RejectsScientificNotation) {
  EXPECT_THROW(parse_scalar("1e3"), ParseError);
  EXPECT_THROW(parse_scalar("2.5E-1"), ParseError);
}

TEST(ParseScalar, RejectsZeroDenominator) {
  try {
    parse_scalar("3/0");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "3/0");
    EXPECT_NE(std::string(e.what()).find("3/0"), std::string::npos);
  }
}

TEST(ScalarArithmetic, Examples) {
  EXPECT_EQ(add(Scalar::ratio(1, 3), Scalar::ratio(1, 6)), Scalar::ratio(1, 2));
  EXPECT_EQ(mul(Scalar(3), Scalar(5)), Scalar(15));
  const Scalar z = sub(Scalar::ratio(7, 2), Scalar::ratio(7, 2));
  expect_fraction(z, "0", "1");
  EXPECT_TRUE(z.is_zero());
}

TEST(ScalarArithmetic, DivisionByZeroIsDomainError) {
  EXPECT_THROW(Scalar(1) / Scalar(0), DomainError);
  EXPECT_THROW(Scalar::ratio(1, 0), DomainError);
  EXPECT_EQ(Scalar(1) / Scalar(4), parse_scalar("0.25"));
}

TEST(ScalarCompare, Examples) {
  EXPECT_EQ(compare(Scalar::ratio(1, 3), Scalar::ratio(2, 6)), std::strong_ordering::equal);
  EXPECT_EQ(compare(Scalar::ratio(-1, 2), Scalar(0)), std::strong_ordering::less);
  EXPECT_EQ(compare(Scalar::ratio(10, 3), Scalar(3)), std::strong_ordering::greater);
}

TEST(ScalarText, RoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Scalar s = random_rational(rng, 1'000'000, 1000);
    EXPECT_EQ(parse_scalar(s.to_string()), s);
  }
  EXPECT_EQ(Scalar::ratio(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Scalar(0).to_string(), "0");
}

TEST(ScalarProperties, CanonicalFormAfterEveryOperation) {
  Rng rng(1);
  for (int i = 0; i < 5000; ++i) {
    const Scalar a = random_rational(rng);
    const Scalar b = random_rational(rng);
    EXPECT_TRUE((a + b).is_canonical());
    EXPECT_TRUE((a - b).is_canonical());
    EXPECT_TRUE((a * b).is_canonical());
    if (!b.is_zero()) EXPECT_TRUE((a / b).is_canonical());
    EXPECT_TRUE((-a).is_canonical());
  }
}

TEST(ScalarProperties, CompareIsATotalOrder) {
  Rng rng(2);
  for (int i = 0; i < 5000; ++i) {
    // Small range so equal values show up.
    const Scalar a = random_rational(rng, 6, 4);
    const Scalar b = random_rational(rng, 6, 4);
    const Scalar c = random_rational(rng, 6, 4);
    EXPECT_EQ(compare(a, b), 0 <=> compare(b, a));  // antisymmetry
    if (compare(a, b) <= 0 && compare(b, c) <= 0) EXPECT_TRUE(compare(a, c) <= 0);  // transitivity
    EXPECT_EQ(compare(a, b) == 0, (a - b).is_zero());
    // Agrees with the sign of the cross-multiplied difference.
    const mpz_class cross = a.numerator() * b.denominator() - b.numerator() * a.denominator();
    EXPECT_EQ(compare(a, b), sgn(cross) <=> 0);
  }
}

TEST(ScalarProperties, ArithmeticIsExact) {
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Scalar a = random_rational(rng, 1'000'000'000, 1'000'000);
    const Scalar b = random_rational(rng, 1'000'000'000, 1'000'000);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
  }
}

TEST(ExtendedScalar, InfinityDominates) {
  const auto inf = ExtendedScalar::infinity();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_TRUE(inf.at_least(parse_scalar("1000000000000")));
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_THROW(static_cast<void>(inf.value()), DomainError);

  const ExtendedScalar five(Scalar(5));
  EXPECT_TRUE(five.at_least(Scalar(5)));
  EXPECT_FALSE(five.at_least(Scalar::ratio(11, 2)));
  EXPECT_NE(five, inf);
  EXPECT_EQ(five, ExtendedScalar(Scalar::ratio(10, 2)));
}

}  // namespace
}  // namespace ranklab
