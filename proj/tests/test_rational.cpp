#include "hermcert/rational.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace hermcert;
using testsupport::Gen;

namespace {

Rational q(const char* text) { return parse_rational(text); }

}  // namespace

TEST(RationalText, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(q("3/4"), Rational(3, 4));
  EXPECT_EQ(q("-6/8"), Rational(-3, 4));
  EXPECT_EQ(q("17"), Rational(17));
  EXPECT_EQ(q("1e-10"), make_rational(1, Integer("10000000000")));
  EXPECT_EQ(q("-1.25e-3"), make_rational(-1, 800));
  EXPECT_EQ(q("0.3333333"), make_rational(3333333, 10000000));
  EXPECT_THROW(q("1/0"), std::invalid_argument);
  EXPECT_THROW(q("abc"), std::invalid_argument);
  EXPECT_THROW(q(""), std::invalid_argument);
}

TEST(RationalText, PrintsReducedForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(RationalText, RoundTripsRandomValues) {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.rational(1000000, 100000);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(FromDouble, IsTheDyadicValue) {
  EXPECT_EQ(from_double(0.5), Rational(1, 2));
  EXPECT_EQ(from_double(-3.0), Rational(-3));
  // 0.1 is not 1/10 in binary; its exact value has denominator 2^55.
  const Rational tenth = from_double(0.1);
  EXPECT_NE(tenth, Rational(1, 10));
  EXPECT_EQ(tenth.get_den(), Integer(1) << 55);
  EXPECT_THROW(from_double(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(CeilSqrt, MatchesSearch) {
  EXPECT_EQ(ceil_sqrt(Rational(0)), 0);
  EXPECT_EQ(ceil_sqrt(Rational(16)), 4);
  EXPECT_EQ(ceil_sqrt(Rational(17)), 5);
  EXPECT_EQ(ceil_sqrt(Rational(1, 4)), 1);
  Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    Rational v(gen.integer(0, 1000000), gen.integer(1, 50));
    v.canonicalize();
    const Integer r = ceil_sqrt(v);
    EXPECT_GE(Rational(r * r), v);
    if (r > 0) EXPECT_LT(Rational((r - 1) * (r - 1)), v);
  }
}

TEST(Convergents, ZeroHasSingleConvergent) {
  const auto c = convergents(Rational(0));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], 0);
}

TEST(Convergents, RationalExpansionEndsAtItself) {
  const auto c = convergents(Rational(355, 113));
  EXPECT_EQ(c.back(), Rational(355, 113));
  const auto d = convergents(Rational(415, 93));
  const std::vector<Rational> expected{Rational(4), Rational(9, 2), Rational(58, 13), Rational(415, 93)};
  EXPECT_EQ(d, expected);
}

TEST(Convergents, IncludesOneThirdFor333333Millionths) {
  const auto c = convergents(make_rational(333333, 1000000));
  EXPECT_NE(std::find(c.begin(), c.end(), Rational(1, 3)), c.end());
  // Oracle: 1/3 is the only fraction with q <= 10 within 1/200.
  EXPECT_EQ(testsupport::brute_force_fractions(make_rational(333333, 1000000), 10),
            std::vector<Rational>{Rational(1, 3)});
}

TEST(Convergents, AlternateAndGrowDenominators) {
  Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    Rational alpha(gen.integer(0, 1000000), gen.integer(1, 100000));
    alpha.canonicalize();
    const auto c = convergents(alpha);
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (j >= 2) EXPECT_GT(c[j].get_den(), c[j - 1].get_den());
      if (c[j] != alpha && c[j - 1] != alpha) EXPECT_NE(c[j] < alpha, c[j - 1] < alpha);
    }
  }
  EXPECT_THROW(convergents(Rational(-1)), std::invalid_argument);
}

TEST(RationalReconstruct, DeskExamples) {
  EXPECT_EQ(rational_reconstruct(Rational(1, 2), 10), Rational(1, 2));
  EXPECT_EQ(rational_reconstruct(make_rational(3333333, 10000000), 100), Rational(1, 3));
  EXPECT_EQ(rational_reconstruct(make_rational(707106781, 1000000000), 10), std::nullopt);
  EXPECT_TRUE(testsupport::brute_force_fractions(make_rational(707106781, 1000000000), 10).empty());
  EXPECT_EQ(rational_reconstruct(make_rational(-3333333, 10000000), 100), Rational(-1, 3));
}

TEST(RationalReconstruct, AgreesWithExhaustiveSearch) {
  Gen gen(2024);
  for (int i = 0; i < 400; ++i) {
    const long bound = gen.integer(1, 60);
    Rational alpha(gen.integer(-50000, 50000), gen.integer(1, 10000));
    alpha.canonicalize();
    const auto found = rational_reconstruct(alpha, bound);
    const auto oracle = testsupport::brute_force_fractions(alpha, bound);
    ASSERT_LE(oracle.size(), 1u);
    if (oracle.empty())
      EXPECT_EQ(found, std::nullopt) << to_string(alpha) << " B=" << bound;
    else
      EXPECT_EQ(found, oracle.front()) << to_string(alpha) << " B=" << bound;
  }
}

TEST(RationalReconstruct, RecoversPerturbedFractions) {
  Gen gen(99);
  for (int i = 0; i < 300; ++i) {
    const long bound = gen.integer(1, 5000);
    Rational target(gen.integer(-100000, 100000), gen.integer(1, bound));
    target.canonicalize();
    // |delta| < 1/(2 B^2)
    Rational delta(gen.integer(-999, 999), 2000 * bound * bound);
    delta.canonicalize();
    const auto found = rational_reconstruct(target + delta, bound);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, target);
    Rational dist = abs(*found - (target + delta));
    EXPECT_LT(dist, Rational(1, 2 * bound * bound));
    EXPECT_LE(found->get_den(), bound);
  }
}

TEST(DenominatorBound, DeskValues) {
  EXPECT_EQ(denominator_bound(Rational(1, 200), 1, 1, 1, Rational(1)), Integer(10));
  EXPECT_EQ(denominator_bound(Rational(1), 1, 1, 1, Rational(1)), std::nullopt);
  const Rational e = q("1e-10");
  // x = 2 E k n d M^(d-1) = 1.28e-8; the oracle searches r with r^2 x >= 1.
  const Rational x = 2 * e * 2 * 1 * 4 * 8;
  const Integer oracle = testsupport::ceil_inverse_sqrt(x);
  EXPECT_EQ(oracle, 8839);
  EXPECT_EQ(denominator_bound(e, 2, 1, 4, Rational(2)), oracle);
}

TEST(DenominatorBound, MatchesSearchOnRandomInputs) {
  Gen gen(3);
  for (int i = 0; i < 100; ++i) {
    const Rational e(1, gen.integer(1000, 100000000));
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 6));
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const unsigned d = static_cast<unsigned>(gen.integer(1, 6));
    Rational m(gen.integer(1, 40), gen.integer(1, 10));
    m.canonicalize();
    Rational x = 2 * e * static_cast<long>(k * n * d) * testsupport::rat_pow(m, d - 1);
    const auto got = denominator_bound(e, k, n, d, m);
    if (x >= 1) {
      EXPECT_EQ(got, std::nullopt);
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, testsupport::ceil_inverse_sqrt(x));
    }
  }
}

TEST(DenominatorBound, RejectsDegenerateArguments) {
  EXPECT_THROW(denominator_bound(Rational(0), 1, 1, 1, Rational(1)), std::invalid_argument);
  EXPECT_THROW(denominator_bound(Rational(1, 10), 0, 1, 1, Rational(1)), std::invalid_argument);
  EXPECT_THROW(denominator_bound(Rational(1, 10), 1, 1, 0, Rational(1)), std::invalid_argument);
}
