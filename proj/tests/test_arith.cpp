#include <gtest/gtest.h>

#include <set>

#include "errors.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "special.hpp"

using namespace orjuhl;

TEST(Rational, CanonicalForm) {
  Rational q(6, -4);
  EXPECT_EQ(q.num_str(), "-3");
  EXPECT_EQ(q.den_str(), "2");
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_THROW(Rational(1, 0), PoleError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/2").num_str(),
            "61728394506172839450617283945");
  for (const char *bad : {"", "1/", "/2", "1/0", "x", "1.5", "1//2", " 3"})
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, FieldOperations) {
  Rational a(2, 3), b(-5, 7);
  EXPECT_EQ(a + b, Rational(-1, 21));
  EXPECT_EQ(a - b, Rational(29, 21));
  EXPECT_EQ(a * b, Rational(-10, 21));
  EXPECT_EQ(a / b, Rational(-14, 15));
  EXPECT_THROW(a / Rational(0), PoleError);
  EXPECT_THROW(reciprocal(Rational(0)), PoleError);
  EXPECT_EQ(power(a, 3), Rational(8, 27));
  EXPECT_EQ(power(a, -2), Rational(9, 4));
  EXPECT_EQ(power(b, 0), Rational(1));
  EXPECT_LT(b, a);
  EXPECT_EQ(Rational(-9).to_long(), -9);
  EXPECT_THROW(a.to_long(), InvalidArgument);
}

TEST(Rational, NoOverflowOnLargeProducts) {
  Rational x(1);
  for (int i = 1; i <= 40; ++i)
    x *= Rational(i);
  EXPECT_EQ(x.num_str(), "815915283247897734345611269596115894272000000000");
  for (int i = 40; i >= 1; --i)
    x /= Rational(i);
  EXPECT_EQ(x, Rational(1));
}

TEST(Special, Pochhammer) {
  EXPECT_EQ(pochhammer(Rational(11, 3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 4), Rational(360));
  EXPECT_EQ(pochhammer(Rational(-2), 4), Rational(0));
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
}

TEST(Special, GammaRatio) {
  const Rational x(13, 5);
  EXPECT_EQ(gamma_ratio(x, 0), Rational(1));
  EXPECT_EQ(gamma_ratio(Rational(5, 2), 2), Rational(35, 4));
  EXPECT_EQ(gamma_ratio(x, -1), reciprocal(x - Rational(1)));
  EXPECT_EQ(gamma_ratio(x, -3),
            reciprocal((x - Rational(1)) * (x - Rational(2)) * (x - Rational(3))));
  EXPECT_THROW(gamma_ratio(Rational(2), -2), PoleError);
  // Gamma(x+m)/Gamma(x) composes additively in m.
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      EXPECT_EQ(gamma_ratio(x, m + n), gamma_ratio(x, m) * gamma_ratio(x + Rational(m), n));
}

TEST(Special, GeneralizedBinomial) {
  const Rational x(-7, 3);
  EXPECT_EQ(gen_binomial(x, 0), Rational(1));
  EXPECT_EQ(gen_binomial(Rational(7, 2), 2), Rational(35, 8));
  EXPECT_EQ(gen_binomial(Rational(3), 5), Rational(0));
  EXPECT_EQ(gen_binomial(Rational(-1), 4), Rational(1));
  // Pascal's rule.
  for (unsigned b = 1; b <= 6; ++b)
    EXPECT_EQ(gen_binomial(x + Rational(1), b), gen_binomial(x, b) + gen_binomial(x, b - 1));
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned b = 0; b <= n; ++b)
      EXPECT_EQ(gen_binomial(Rational(long(n)), b),
                factorial(n) / (factorial(b) * factorial(n - b)));
}

TEST(Special, Multinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(multinomial({2, 1, 1}), Rational(12));
  EXPECT_EQ(multinomial({0, 0}), Rational(1));
  EXPECT_EQ(multinomial({3}), Rational(1));
}

TEST(Sampling, Deterministic) {
  for (std::uint64_t i = 0; i < 20; ++i)
    EXPECT_EQ(sample_rational(42, i), sample_rational(42, i));
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 50; ++i)
    seen.insert(sample_rational(42, i).str());
  EXPECT_GT(seen.size(), 45u);
  EXPECT_NE(sample_rational(1, 0), sample_rational(2, 0));
}

TEST(Sampling, AvoidsPoles) {
  const auto pole = [](const Rational &x) { return is_small_integer(x, 20); };
  SamplingBounds narrow;
  narrow.max_abs_numerator = 30;
  narrow.max_denominator = 2;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rational x = sample_rational(7, i, pole, narrow);
    EXPECT_FALSE(is_small_integer(x, 20)) << x;
  }
  EXPECT_THROW(sample_rational(7, 0, [](const Rational &) { return true; }), SamplingExhausted);
}

TEST(Sampling, StaysInRange) {
  SamplingBounds b;
  b.max_abs_numerator = 100;
  b.max_denominator = 10;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rational x = sample_rational(3, i, {}, b);
    EXPECT_LE(std::abs(std::stol(x.num_str())), 100);
    EXPECT_LE(std::stol(x.den_str()), 10);
  }
}

TEST(Sampling, JointPoint) {
  const std::vector<std::string> labels{"L", "K"};
  const auto bad = [](const ParamPoint &p) { return p.value("L") == p.value("K"); };
  ParamPoint a = sample_point(9, 3, labels, bad);
  EXPECT_EQ(a, sample_point(9, 3, labels, bad));
  EXPECT_NE(a.value("L"), a.value("K"));
  EXPECT_THROW(a.value("n"), InvalidArgument);
  EXPECT_TRUE(is_small_integer(Rational(-4), 4));
  EXPECT_FALSE(is_small_integer(Rational(-5), 4));
  EXPECT_FALSE(is_small_integer(Rational(1, 2), 4));
}
