#include "hermcert/linalg.hpp"
#include "hermcert/poly.hpp"
#include "hermcert/upoly.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace hermcert;
using testsupport::Gen;

TEST(Monomials, ScanOrderWithinAndAcrossDegrees) {
  const auto deg2 = monomials_of_degree(2, 2);
  const std::vector<Monomial> expected{Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}};
  EXPECT_EQ(deg2, expected);
  EXPECT_TRUE(BasisScanLess{}(Monomial{0, 1}, Monomial{2, 0}));
  EXPECT_TRUE(BasisScanLess{}(Monomial{1, 0}, Monomial{0, 1}));
  EXPECT_TRUE(grlex_compare(Monomial{1, 1}, Monomial{0, 2}) > 0);
  EXPECT_TRUE(grlex_compare(Monomial{0, 3}, Monomial{2, 0}) > 0);
}

TEST(Monomials, PrintAndDivide) {
  const Ring ring{"x", "y"};
  EXPECT_EQ(to_string(Monomial{0, 0}, ring), "1");
  EXPECT_EQ(to_string(Monomial{2, 1}, ring), "x^2*y");
  const Monomial xy2{1, 2};
  const Monomial y2{0, 2};
  EXPECT_EQ(xy2.divided_by_variable(1), (Monomial{1, 1}));
  EXPECT_EQ(y2.divided_by_variable(0), std::nullopt);
  EXPECT_TRUE(xy2.divides(Monomial{1, 3}));
  EXPECT_FALSE(xy2.divides(y2));
}

TEST(Ring, RejectsBadNames) {
  EXPECT_THROW(Ring({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(Ring({"1x"}), std::invalid_argument);
  EXPECT_EQ(Ring::generic(2).names(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(Parse, DeskExamples) {
  const Ring r1{"x1"};
  const MultiPoly p = parse_poly("x1^2 - 2", r1);
  EXPECT_EQ(p.coefficient(Monomial{2}), 1);
  EXPECT_EQ(p.coefficient(Monomial{0}), -2);
  EXPECT_EQ(p.terms().size(), 2u);

  const Ring r3{"x", "y", "l"};
  const MultiPoly c = parse_poly("x^2+y^2-1", r3);
  EXPECT_EQ(c.coefficient(Monomial{0, 2, 0}), 1);
  EXPECT_EQ(c.total_degree(), 2u);

  const Ring r2{"x1", "x2"};
  const MultiPoly t = parse_poly("3/4*x1*x2 - x2^3", r2);
  EXPECT_EQ(t.coefficient(Monomial{1, 1}), Rational(3, 4));
  EXPECT_EQ(t.coefficient(Monomial{0, 3}), -1);
  EXPECT_EQ(to_string(t), "-x2^3 + 3/4*x1*x2");
}

TEST(Parse, ReportsPositionAndUnknownVariables) {
  const Ring r{"x"};
  try {
    parse_poly("x^2 + * 3", r);
    FAIL() << "expected a parse error";
  } catch (const PolyParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_poly("x + y", r), PolyParseError);
  EXPECT_TRUE(parse_poly("x - x", r).is_zero());
  EXPECT_EQ(to_string(parse_poly("x - x", r)), "0");
}

TEST(Parse, PrintParseRoundTrip) {
  Gen gen(17);
  const Ring ring{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    MultiPoly p(ring);
    for (int t = 0; t < 5; ++t)
      p.add_term(Monomial{static_cast<std::uint32_t>(gen.integer(0, 3)), static_cast<std::uint32_t>(gen.integer(0, 3)),
                          static_cast<std::uint32_t>(gen.integer(0, 3))},
                 gen.rational(20, 9));
    EXPECT_EQ(parse_poly(to_string(p), ring), p) << to_string(p);
  }
}

TEST(Derivative, DeskExamples) {
  const Ring r{"x", "y"};
  EXPECT_EQ(partial_derivative(parse_poly("x^2 - 2", r), 0), parse_poly("2*x", r));
  EXPECT_EQ(partial_derivative(parse_poly("x^2 + y^2 - 1", r), 1), parse_poly("2*y", r));
  EXPECT_TRUE(partial_derivative(parse_poly("7/3", r), 0).is_zero());
}

TEST(EvalComplex, DeskExamples) {
  const Ring r{"x"};
  const Complex v = eval_complex(parse_poly("x^2 - 2", r), std::vector<Complex>{1.41421356});
  EXPECT_NEAR(v.real(), 1.41421356 * 1.41421356 - 2.0, 1e-15);
  EXPECT_NEAR(v.real(), -6.7121e-9, 1e-12);
  EXPECT_EQ(v.imag(), 0.0);
  const Ring r3{"x", "y", "l"};
  const MultiPoly g = parse_poly("x + 2", r3);
  EXPECT_EQ(eval_complex(g, std::vector<Complex>{1.0, 0.0, -0.5}), Complex(3.0, 0.0));
  const MultiPoly h = parse_poly("5/2*x*y - 3", r3);
  EXPECT_EQ(eval_complex(h, std::vector<Complex>{0.0, 0.0, 0.0}), Complex(-3.0, 0.0));
}

TEST(EvalAtMatrices, DeskExamples) {
  const Ring r{"x"};
  const RatMatrix m{{0, 2}, {1, 0}};
  EXPECT_TRUE(eval_at_matrices(parse_poly("x^2 - 2", r), std::vector<RatMatrix>{m}).is_zero());
  EXPECT_EQ(eval_at_matrices(parse_poly("1", r), std::vector<RatMatrix>{m}), RatMatrix::identity(2));
  const RatMatrix m2{{0, 2}, {1, -1}};
  EXPECT_TRUE(eval_at_matrices(parse_poly("x^3 - 3*x + 2", r), std::vector<RatMatrix>{m2}).is_zero());
  EXPECT_THROW(eval_at_matrices(parse_poly("x", r), std::vector<RatMatrix>{m, m}), std::invalid_argument);
}

// Commuting families from polynomials in one random matrix.
TEST(EvalAtMatrices, IsARingHomomorphismOnCommutingFamilies) {
  Gen gen(41);
  const Ring ring{"a", "b"};
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix base = gen.matrix(3, 3, 4, 3);
    const RatMatrix ma = base * base + Rational(gen.integer(-2, 2)) * base;
    const RatMatrix mb = base + Rational(gen.integer(-3, 3)) * RatMatrix::identity(3);
    const std::vector<RatMatrix> mats{ma, mb};
    MultiPoly p(ring), q(ring);
    for (int t = 0; t < 3; ++t) {
      p.add_term(Monomial{static_cast<std::uint32_t>(gen.integer(0, 2)), static_cast<std::uint32_t>(gen.integer(0, 2))},
                 gen.rational(5, 3));
      q.add_term(Monomial{static_cast<std::uint32_t>(gen.integer(0, 2)), static_cast<std::uint32_t>(gen.integer(0, 2))},
                 gen.rational(5, 3));
    }
    EXPECT_EQ(eval_at_matrices(p * q, mats), eval_at_matrices(p, mats) * eval_at_matrices(q, mats));
    EXPECT_EQ(eval_at_matrices(p + q, mats), eval_at_matrices(p, mats) + eval_at_matrices(q, mats));
  }
}

TEST(Univariate, GcdDeskExamples) {
  const UPoly a{-1, 0, 1};
  const UPoly b{-1, 1};
  EXPECT_EQ(univariate_gcd(a, b), (UPoly{-1, 1}));
  EXPECT_EQ(univariate_gcd(UPoly{8, -6, 1}, UPoly{-6, 2}), (UPoly{1}));
  EXPECT_EQ(univariate_gcd(UPoly{1, -2, 1}, UPoly{-2, 2}), (UPoly{-1, 1}));
  EXPECT_THROW(univariate_gcd(UPoly{}, UPoly{}), std::invalid_argument);
}

TEST(Univariate, GcdOfFactoredProducts) {
  Gen gen(8);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> shared, only_a, only_b;
    for (int t = 0; t < gen.integer(0, 2); ++t) shared.push_back(Rational(gen.integer(-20, 20)));
    for (int t = 0; t < gen.integer(0, 2); ++t) only_a.push_back(Rational(100 + gen.integer(0, 20)));
    for (int t = 0; t < gen.integer(0, 2); ++t) only_b.push_back(Rational(-100 - gen.integer(0, 20)));
    std::vector<Rational> ra = shared, rb = shared;
    ra.insert(ra.end(), only_a.begin(), only_a.end());
    rb.insert(rb.end(), only_b.begin(), only_b.end());
    const UPoly pa = testsupport::expand_roots(ra, {});
    const UPoly pb = testsupport::expand_roots(rb, {});
    // With distinct shared roots the gcd is the product over the shared set.
    std::sort(shared.begin(), shared.end());
    if (std::adjacent_find(shared.begin(), shared.end()) != shared.end()) continue;
    EXPECT_EQ(univariate_gcd(pa, pb), testsupport::expand_roots(shared, {}));
  }
}

TEST(Univariate, SignVariations) {
  EXPECT_EQ(sign_variations(std::vector<Rational>{1, -6, 8}), 2);
  EXPECT_EQ(sign_variations(std::vector<Rational>{1, 6, 8}), 0);
  EXPECT_EQ(sign_variations(std::vector<Rational>{1, 0, -4}), 1);
}

TEST(Univariate, DescartesCountsRealRootedPolynomials) {
  Gen gen(19);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> roots;
    long pos = 0, neg = 0;
    const long count = gen.integer(1, 6);
    for (long t = 0; t < count; ++t) {
      Rational r = gen.rational(30, 4);
      if (r == 0) r = 1;
      (r > 0 ? pos : neg) += 1;
      roots.push_back(r);
    }
    const UPoly p = testsupport::expand_roots(roots, {});
    EXPECT_EQ(sign_variations(p), pos);
    EXPECT_EQ(sign_variations(upoly_reflect(p)), neg);
  }
}

TEST(NewtonGirard, DeskExamples) {
  EXPECT_EQ(newton_girard_power_sums(UPoly{-2, 0, 1}, 4), (std::vector<Rational>{2, 0, 4, 0, 8}));
  const Rational c(7, 3);
  EXPECT_EQ(newton_girard_power_sums(UPoly{-c, 1}, 2), (std::vector<Rational>{1, c, c * c}));
  EXPECT_EQ(newton_girard_power_sums(UPoly{-2, 1, 1}, 4), (std::vector<Rational>{2, -1, 5, -7, 17}));
}

TEST(NewtonGirard, MatchesTracesOfMatrixPowers) {
  Gen gen(23);
  for (int i = 0; i < 50; ++i) {
    const RatMatrix m = gen.matrix(3, 3, 6, 4);
    const auto sums = newton_girard_power_sums(char_poly(m), 6);
    RatMatrix power = RatMatrix::identity(3);
    for (std::size_t t = 0; t <= 6; ++t) {
      EXPECT_EQ(sums[t], power.trace()) << "power " << t;
      power = power * m;
    }
  }
}

TEST(MultiPoly, CoefficientsAreReduced) {
  const Ring r{"x"};
  MultiPoly p(r);
  p.add_term(Monomial{1}, Rational(1));
  p.add_term(Monomial{0}, Rational(-6, 2));  // unreduced input
  EXPECT_EQ(p, parse_poly("x - 3", r));
  EXPECT_EQ(to_string(p), "x - 3");
  const RatMatrix m{{0, 2}, {1, 0}};
  EXPECT_EQ(eval_at_matrices(p, std::vector<RatMatrix>{m}), (RatMatrix{{-3, 2}, {1, -3}}));
}
