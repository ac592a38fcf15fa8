#include <gtest/gtest.h>

#include "twq/rational.hpp"

namespace twq {
namespace {

TEST(Rational, StoresReducedForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(2).str(), "2/1");
  EXPECT_EQ(Rational(0).str(), "0/1");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_ANY_THROW(Rational(BigInt(1), BigInt(0))); }

TEST(Rational, Arithmetic) {
  Rational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
  EXPECT_EQ(a + b, Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(BigInt(1), BigInt(18)));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(BigInt(-1), BigInt(3)));
  EXPECT_LT(b, a);
  EXPECT_LT(-a, b);
}

TEST(Rational, FloorCeil) {
  Rational r(BigInt(-7), BigInt(2));
  EXPECT_EQ(r.floor(), BigInt(-4));
  EXPECT_EQ(r.ceil(), BigInt(-3));
  EXPECT_EQ(Rational(5).floor(), BigInt(5));
  EXPECT_EQ(Rational(5).ceil(), BigInt(5));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(BigInt(-3), BigInt(2)));
  EXPECT_EQ(Rational::parse("0.125"), Rational(BigInt(1), BigInt(8)));
  EXPECT_EQ(Rational::parse("-0.5"), Rational(BigInt(-1), BigInt(2)));
  EXPECT_ANY_THROW(Rational::parse("abc"));
  EXPECT_ANY_THROW(Rational::parse("1/0"));
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(Rational(1), Rational(2)), Rational(BigInt(3), BigInt(2)));
  EXPECT_EQ(simplest_between(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2))),
            Rational(BigInt(2), BigInt(5)));
  EXPECT_EQ(simplest_between(Rational(-1), Rational(1)), Rational(0));
  EXPECT_EQ(simplest_between(Rational(BigInt(-7), BigInt(3)), Rational(-2)), Rational(BigInt(-9), BigInt(4)));
  EXPECT_EQ(simplest_between(Rational(BigInt(29), BigInt(20)), Rational(BigInt(31), BigInt(20))),
            Rational(BigInt(3), BigInt(2)));
}

TEST(Rational, SimplestBetweenMatchesDenominatorScan) {
  for (int lp = -12; lp <= 12; ++lp) {
    for (int lq = 1; lq <= 5; ++lq) {
      for (int width = 1; width <= 6; ++width) {
        Rational lo{BigInt(lp), BigInt(lq)};
        Rational hi = lo + Rational(BigInt(width), BigInt(7));
        Rational got = simplest_between(lo, hi);
        std::optional<Rational> want;
        for (int q = 1; q <= 64 && !want; ++q) {
          for (int p = -200; p <= 200; ++p) {
            Rational c{BigInt(p), BigInt(q)};
            if (lo < c && c < hi && (!want || c.abs() < want->abs())) want = c;
          }
        }
        ASSERT_TRUE(want.has_value());
        EXPECT_EQ(got, *want) << lo << " " << hi;
      }
    }
  }
}

TEST(Rational, CeilLog2) {
  EXPECT_EQ(ceil_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_log2(Rational(2)), 1);
  EXPECT_EQ(ceil_log2(Rational(3)), 2);
  EXPECT_EQ(ceil_log2(Rational(BigInt(1), BigInt(3))), 0);
  EXPECT_EQ(ceil_log2(Rational(1024)), 10);
  EXPECT_EQ(ceil_log2(Rational(1025)), 11);
}

}  // namespace
}  // namespace twq
