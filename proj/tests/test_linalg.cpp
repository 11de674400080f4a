#include "hermcert/linalg.hpp"
#include "hermcert/poly.hpp"

#include "support.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

using namespace hermcert;
using testsupport::Gen;

namespace {

RatMatrix diag(std::initializer_list<Rational> values) {
  RatMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (const auto& v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

// Unit lower-triangular matrix with random entries, then rows permuted.
RatMatrix random_nonsingular(Gen& gen, std::size_t n) {
  RatMatrix l = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = gen.rational(5, 3);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen.engine());
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = l(perm[i], j);
  return out;
}

Rational leibniz_det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 1) term = -term;
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Rank, DeskExamples) {
  EXPECT_EQ(rank(RatMatrix::zero(3, 4)), 0u);
  EXPECT_EQ(rank(RatMatrix{{3, 0, 6}, {0, 6, -6}, {6, -6, 18}}), 2u);
  EXPECT_EQ(rank(RatMatrix::identity(5)), 5u);
}

TEST(Rank, PlantedRankAndTranspose) {
  Gen gen(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 6));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
    const std::size_t r = static_cast<std::size_t>(gen.integer(0, static_cast<long>(std::min(rows, cols))));
    // Left factor has I_r on top, right factor has I_r on the left, so the
    // product has rank exactly r.
    RatMatrix left(rows, r), right(r, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < r; ++j) left(i, j) = i < r ? Rational(i == j ? 1 : 0) : gen.rational(4, 3);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols; ++j) right(i, j) = j < r ? Rational(i == j ? 1 : 0) : gen.rational(4, 3);
    RatMatrix a = r == 0 ? RatMatrix::zero(rows, cols) : left * right;
    const RatMatrix p = random_nonsingular(gen, rows);
    a = p * a;
    EXPECT_EQ(rank(a), r);
    EXPECT_EQ(rank(a.transpose()), r);
  }
}

TEST(Determinant, MatchesPermutationExpansion) {
  Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const RatMatrix a = gen.coin() ? gen.matrix(n, n, 6, 4) : gen.symmetric(n, 6, 4);
    EXPECT_EQ(determinant(a), leibniz_det(a));
  }
}

TEST(Inverse, DeskExamples) {
  EXPECT_EQ(inverse(diag({2, 4})), diag({Rational(1, 2), Rational(1, 4)}));
  const RatMatrix hx{{0, 4}, {4, 0}};
  EXPECT_EQ(inverse(diag({2, 4})) * hx, (RatMatrix{{0, 2}, {1, 0}}));
  EXPECT_THROW(inverse(RatMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
  EXPECT_THROW(inverse(RatMatrix(2, 3)), std::invalid_argument);
}

TEST(Inverse, IsTwoSidedOnRandomNonsingular) {
  Gen gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const RatMatrix a = gen.matrix(n, n, 7, 5);
    if (leibniz_det(a) == 0) {
      EXPECT_THROW(inverse(a), SingularMatrixError);
      continue;
    }
    const RatMatrix inv = inverse(a);
    EXPECT_EQ(a * inv, RatMatrix::identity(n));
    EXPECT_EQ(inv * a, RatMatrix::identity(n));
  }
}

TEST(Inertia, DeskExamples) {
  EXPECT_EQ(inertia_ldl(diag({2, -3})), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia_ldl(diag({2, -3})).signature(), 0);
  EXPECT_EQ(inertia_ldl(RatMatrix{{4, 2}, {2, 4}}), (Inertia{2, 0, 0}));
  EXPECT_EQ(inertia_ldl(RatMatrix{{2, 2}, {2, 2}}), (Inertia{1, 0, 1}));
  EXPECT_EQ(inertia_ldl(RatMatrix{{0, 4}, {4, 0}}), (Inertia{1, 1, 0}));
  EXPECT_THROW(inertia_ldl(RatMatrix{{1, 2}, {3, 4}}), NotSymmetricError);
  EXPECT_THROW(signature_descartes(RatMatrix{{1, 2}, {3, 4}}), NotSymmetricError);
}

TEST(Inertia, DescartesDeskExamples) {
  EXPECT_EQ(char_poly(diag({2, 4})), (UPoly{8, -6, 1}));
  EXPECT_EQ(signature_descartes(diag({2, 4})), 2);
  EXPECT_EQ(signature_descartes(RatMatrix::zero(3, 3)), 0);
  EXPECT_EQ(signature_descartes(RatMatrix{{0, 4}, {4, 0}}), 0);
  EXPECT_EQ(inertia_descartes(RatMatrix{{2, 2}, {2, 2}}), (Inertia{1, 0, 1}));
}

// S^T D S with diagonal D has inertia read off from the signs of D.
TEST(Inertia, PlantedInertiaBothMethods) {
  Gen gen(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    RatMatrix d(n, n);
    Inertia expected;
    for (std::size_t i = 0; i < n; ++i) {
      const long sign = gen.integer(-1, 1);
      d(i, i) = sign == 0 ? Rational(0) : testsupport::frac(sign * gen.integer(1, 9), gen.integer(1, 4));
      (sign > 0 ? expected.positive : sign < 0 ? expected.negative : expected.zero) += 1;
    }
    const RatMatrix s = random_nonsingular(gen, n);
    const RatMatrix a = s.transpose() * d * s;
    EXPECT_EQ(inertia_ldl(a), expected);
    EXPECT_EQ(inertia_descartes(a), expected);
  }
}

TEST(Inertia, LdlAgreesWithDescartesOnRandomSymmetric) {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    const RatMatrix a = gen.symmetric(n, 5, 3);
    const Inertia ldl = inertia_ldl(a);
    EXPECT_EQ(ldl, inertia_descartes(a));
    EXPECT_EQ(ldl.positive + ldl.negative + ldl.zero, n);
    EXPECT_EQ(ldl.zero, n - rank(a));
  }
}

TEST(Inertia, CongruenceInvariance) {
  Gen gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const RatMatrix a = gen.symmetric(n, 5, 3);
    const RatMatrix s = gen.matrix(n, n, 4, 2);
    if (rank(s) != n) continue;
    EXPECT_EQ(inertia_ldl(s.transpose() * a * s), inertia_ldl(a));
  }
}

TEST(CharPoly, DeskExamples) {
  EXPECT_EQ(char_poly(RatMatrix{{0, 2}, {1, 0}}), (UPoly{-2, 0, 1}));
  EXPECT_EQ(char_poly(RatMatrix::identity(3)), (UPoly{-1, 3, -3, 1}));
  EXPECT_EQ(char_poly(diag({2, 4})), (UPoly{8, -6, 1}));
}

TEST(CharPoly, CayleyHamilton) {
  Gen gen(19);
  const Ring ring{"t"};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const RatMatrix a = gen.matrix(n, n, 5, 3);
    const UPoly cp = char_poly(a);
    ASSERT_EQ(cp.size(), n + 1);
    EXPECT_EQ(cp.back(), 1);
    EXPECT_EQ(cp.front(), (n % 2 == 0 ? Rational(1) : Rational(-1)) * leibniz_det(a));
    MultiPoly p(ring);
    for (std::size_t i = 0; i < cp.size(); ++i) p.add_term(Monomial{static_cast<std::uint32_t>(i)}, cp[i]);
    EXPECT_TRUE(eval_at_matrices(p, std::vector<RatMatrix>{a}).is_zero());
  }
}

TEST(ConnectedSubmatrix, DeskExamples) {
  RatMatrix h{{3, 0, 6}, {0, 6, -6}, {6, -6, 18}};
  h.set_labels({Monomial{0}, Monomial{1}, Monomial{2}});
  const ConnectedSelection sel = max_nonsingular_connected_submatrix(h);
  EXPECT_EQ(sel.monomials, (std::vector<Monomial>{Monomial{0}, Monomial{1}}));
  EXPECT_EQ(sel.submatrix, (RatMatrix{{3, 0}, {0, 6}}));

  RatMatrix full = diag({1, 2, 3});
  full.set_labels({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}});
  EXPECT_EQ(max_nonsingular_connected_submatrix(full).monomials.size(), 3u);

  RatMatrix ones{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}};
  ones.set_labels({Monomial{0}, Monomial{1}, Monomial{2}});
  EXPECT_EQ(max_nonsingular_connected_submatrix(ones).monomials, (std::vector<Monomial>{Monomial{0}}));
}

TEST(ConnectedSubmatrix, GreedyRejectsDisconnectedChoice) {
  // Rank 2 but the x row is zero, so only {1, x^2} is nonsingular and it is
  // not connected to 1.
  RatMatrix h{{1, 0, 1}, {0, 0, 0}, {1, 0, 2}};
  h.set_labels({Monomial{0}, Monomial{1}, Monomial{2}});
  EXPECT_THROW(max_nonsingular_connected_submatrix(h), NoConnectedSelectionError);
}

TEST(ConnectedSubmatrix, SelectionRankMatchesOnHermiteMatrices) {
  Gen gen(29);
  const std::vector<Monomial> labels{Monomial{0}, Monomial{1}, Monomial{2}, Monomial{3}, Monomial{4}};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> weights;
    const long distinct = gen.integer(1, 4);
    for (long t = 0; t < distinct; ++t) {
      pts.push_back({Rational(t * 3 - 4 + gen.integer(0, 2))});
      weights.push_back(Rational(gen.integer(1, 3)));
    }
    RatMatrix h = testsupport::exact_weighted_hermite(pts, weights, labels);
    h.set_labels(labels);
    const ConnectedSelection sel = max_nonsingular_connected_submatrix(h);
    EXPECT_EQ(sel.monomials.size(), rank(h));
    EXPECT_EQ(rank(sel.submatrix), rank(h));
    EXPECT_TRUE(is_connected_to_one(sel.monomials));
  }
}
