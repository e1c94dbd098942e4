#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "cliquemax/algebra.hpp"
#include "support/oracles.hpp"

using namespace cliquemax;
using Decimal = boost::multiprecision::cpp_dec_float_100;

namespace {

Decimal decimal(const BigRational& r) {
  return Decimal(numerator(r)) / Decimal(denominator(r));
}

Decimal decimal(const QuadraticNumber& q) {
  return decimal(q.rational_part()) + decimal(q.surd_coefficient()) * sqrt(Decimal(q.radicand()));
}

}  // namespace

TEST(Binomial, MatchesPascalTriangle) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n + 2; ++k) EXPECT_EQ(binomial(n, k), BigInt(oracle::binomial(n, k))) << n << ' ' << k;
  }
  EXPECT_EQ(binomial(-1, 2), 1);  // (-1)(-2)/2
  EXPECT_THROW(binomial(4, -1), std::invalid_argument);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("7/2"), BigRational(7, 2));
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(parse_rational("12"), BigRational(12));
  EXPECT_EQ(to_string(BigRational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(BigRational(5)), "5");
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(QuadraticNumber, NormalizesRadicands) {
  const QuadraticNumber eight(0, 1, 8);
  EXPECT_EQ(eight.radicand(), 2);
  EXPECT_EQ(eight.surd_coefficient(), 2);
  const QuadraticNumber nine(1, 2, 9);
  EXPECT_TRUE(nine.is_rational());
  EXPECT_EQ(nine, QuadraticNumber(7));
  const QuadraticNumber zero_coeff(3, 0, 5);
  EXPECT_EQ(zero_coeff.radicand(), 0);
  EXPECT_THROW(QuadraticNumber(0, 1, -2), std::domain_error);
}

TEST(QuadraticNumber, FieldArithmetic) {
  const QuadraticNumber r2(0, 1, 2);
  EXPECT_EQ(r2 * r2, QuadraticNumber(2));
  const QuadraticNumber x(1, 1, 5);  // golden ratio times two
  EXPECT_EQ(x * x, QuadraticNumber(6, 2, 5));
  EXPECT_EQ(x - x, QuadraticNumber(0));
  EXPECT_EQ((x * x) / BigRational(2), QuadraticNumber(3, 1, 5));
  EXPECT_THROW(QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3), RadicandMismatch);
  EXPECT_NO_THROW(QuadraticNumber(0, 1, 2) + QuadraticNumber(4));
}

TEST(QuadraticNumber, ExactSignNearZero) {
  // 99 - 70 sqrt(2) is about 0.00505, and 70 sqrt(2) - 99 is its negative.
  EXPECT_EQ(QuadraticNumber(99, -70, 2).sign(), 1);
  EXPECT_EQ(QuadraticNumber(-99, 70, 2).sign(), -1);
  // 19601 - 13860 sqrt(2) ~ 2.55e-5.
  EXPECT_EQ(QuadraticNumber(19601, -13860, 2).sign(), 1);
  EXPECT_EQ(QuadraticNumber(0).sign(), 0);
}

TEST(QuadraticNumber, CompareAgreesWithHighPrecision) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::uniform_int_distribution<int> rad(0, 40);
  int decided = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const QuadraticNumber p(BigRational(coef(rng), 1 + std::abs(coef(rng))), coef(rng), rad(rng));
    const QuadraticNumber q(BigRational(coef(rng), 1 + std::abs(coef(rng))), coef(rng), rad(rng));
    const Decimal diff = decimal(p) - decimal(q);
    if (abs(diff) < Decimal("1e-60")) continue;
    ++decided;
    const auto expected = diff > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    EXPECT_EQ(compare(p, q), expected) << p.to_string() << " vs " << q.to_string();
  }
  EXPECT_GT(decided, 1500);
  EXPECT_EQ(compare(QuadraticNumber(0, 1, 2), QuadraticNumber(0, 1, 2)), std::strong_ordering::equal);
}

TEST(SurdSum, DetectsCancellationAcrossRadicands) {
  SurdSum s;
  s.add(QuadraticNumber(0, 1, 2));
  s.add(QuadraticNumber(0, 1, 8));
  s.add(QuadraticNumber(0, -3, 2));
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.as_rational(), BigRational(0));

  SurdSum t;
  t.add(QuadraticNumber(0, 1, 2));
  t.add(QuadraticNumber(0, 1, 3));
  t.add(QuadraticNumber(0, -1, 5));  // sqrt2 + sqrt3 - sqrt5 ~ 0.91
  EXPECT_EQ(t.sign(), 1);
  EXPECT_FALSE(t.as_rational());

  // sqrt(2) + sqrt(3) vs sqrt(10): 3.146 vs 3.162.
  SurdSum close;
  close.add(QuadraticNumber(0, 1, 2));
  close.add(QuadraticNumber(0, 1, 3));
  close.add(QuadraticNumber(0, -1, 10));
  EXPECT_EQ(close.sign(), -1);
}

TEST(SurdSum, SignMatchesHighPrecision) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::uniform_int_distribution<int> rad(1, 60);
  for (int trial = 0; trial < 500; ++trial) {
    SurdSum s;
    Decimal value = 0;
    for (int i = 0; i < 4; ++i) {
      const QuadraticNumber q(coef(rng), coef(rng), rad(rng));
      const BigRational w(coef(rng), 1 + std::abs(coef(rng)));
      s.add(q, w);
      value += decimal(q) * decimal(w);
    }
    if (abs(value) < Decimal("1e-60")) {
      EXPECT_EQ(s.sign(), 0);
    } else {
      EXPECT_EQ(s.sign(), value > 0 ? 1 : -1);
    }
  }
}

TEST(GeneralizedBinomial, IntegerArgumentsGiveBinomials) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(gen_binomial(QuadraticNumber(n), k), QuadraticNumber(BigRational(binomial(n, k))));
  }
  // C(7/2, 2) = (7/2)(5/2)/2 = 35/8.
  EXPECT_EQ(gen_binomial(QuadraticNumber(BigRational(7, 2)), 2), QuadraticNumber(BigRational(35, 8)));
}

TEST(PositiveRoot, InvertsTwoChoose) {
  for (int j = 1; j <= 30; ++j) EXPECT_EQ(u_of(BigRational(binomial(j, 2))), QuadraticNumber(j));
  const QuadraticNumber u = u_of(BigRational(2));
  EXPECT_EQ(gen_binomial(u, 2), QuadraticNumber(2));
  EXPECT_EQ(u, QuadraticNumber(BigRational(1, 2), BigRational(1, 2), 17));
  EXPECT_THROW(u_of(BigRational(-1)), std::invalid_argument);
  EXPECT_EQ(u_of(BigRational(0)), QuadraticNumber(1));
}
