#include "hermcert/certify.hpp"

#include "hermcert/linalg.hpp"
#include "hermcert/upoly.hpp"

#include <algorithm>
#include <random>

namespace hermcert {

int CertificationOutcome::last_step() const {
  if (failure) return failure->step;
  return diagnostics.empty() ? 0 : 7;
}

namespace {

std::string entry_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::size_t label_index(const std::vector<Monomial>& labels, const Monomial& m) {
  const auto it = std::find(labels.begin(), labels.end(), m);
  if (it == labels.end()) throw MissingLabelError("extended matrix has no row for a required monomial");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

HermiteBlocks extract_blocks(const HermitePlus& hplus) {
  if (!hplus.matrix.has_labels()) throw MissingLabelError("extended matrix carries no labels");
  const auto& labels = hplus.matrix.labels();
  const MonomialBasis& basis = hplus.basis;
  const std::size_t n = basis.arity();

  std::vector<std::size_t> rows;
  for (const auto& b : basis) rows.push_back(label_index(labels, b));
  HermiteBlocks out{hplus.matrix.submatrix(rows, rows), {}};
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> cols;
    for (const auto& b : basis) cols.push_back(label_index(labels, b * Monomial::variable(n, s)));
    out.hx.push_back(hplus.matrix.submatrix(rows, cols));
  }
  return out;
}

std::variant<std::vector<RatMatrix>, CertFailure> compute_mult_matrices(const HermiteBlocks& blocks,
                                                                        const RatMatrix& hplus) {
  const std::size_t k = blocks.h1.rows();
  const std::size_t r1 = rank(blocks.h1);
  const std::size_t rplus = rank(hplus);
  if (r1 != k || rplus != k)
    return CertFailure{2, "RankDeficient",
                       "rank H1 = " + std::to_string(r1) + ", rank H+ = " + std::to_string(rplus) +
                           ", k = " + std::to_string(k)};
  const RatMatrix inv = inverse(blocks.h1);
  std::vector<RatMatrix> out;
  for (const auto& hx : blocks.hx) out.push_back(inv * hx);
  return out;
}

std::optional<CertFailure> check_identity_rows(std::span<const RatMatrix> mults, const MonomialBasis& basis) {
  const std::size_t n = basis.arity();
  const std::size_t k = basis.size();
  for (std::size_t s = 0; s < mults.size(); ++s)
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = basis.index_of(basis[i] * Monomial::variable(n, s));
      if (!j) continue;
      for (std::size_t r = 0; r < k; ++r)
        if (mults[s](r, i) != (r == *j ? 1 : 0))
          return CertFailure{3, "IdentityMismatch",
                             "variable " + std::to_string(s) + ", basis element " + std::to_string(i)};
    }
  return std::nullopt;
}

std::vector<std::vector<Rational>> generic_combinations(std::size_t variables, std::size_t k, std::uint64_t seed,
                                                        int count) {
  std::mt19937_64 rng(seed);
  const long range = static_cast<long>(k * k);
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<std::vector<Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> c(variables);
    bool nonzero = false;
    for (auto& ci : c) {
      ci = dist(rng);
      nonzero = nonzero || ci != 0;
    }
    if (nonzero || variables == 0) out.push_back(std::move(c));
  }
  return out;
}

std::optional<CertFailure> check_squarefree(std::span<const RatMatrix> mults,
                                            std::span<const std::vector<Rational>> candidates) {
  if (mults.empty()) return std::nullopt;
  const std::size_t k = mults.front().rows();
  for (const auto& c : candidates) {
    RatMatrix combo(k, k);
    for (std::size_t s = 0; s < mults.size(); ++s) combo += c.at(s) * mults[s];
    const UPoly p = char_poly(combo);
    if (upoly_degree(univariate_gcd(p, upoly_derivative(p))) == 0) return std::nullopt;
  }
  return CertFailure{4, "NotSquarefree",
                     "characteristic polynomial has a repeated root for all " + std::to_string(candidates.size()) +
                         " combinations tried"};
}

std::optional<CertFailure> check_commute_and_membership(std::span<const RatMatrix> mults, const PolySystem& f) {
  for (std::size_t i = 0; i < mults.size(); ++i)
    for (std::size_t j = i + 1; j < mults.size(); ++j)
      if (mults[i] * mults[j] != mults[j] * mults[i])
        return CertFailure{5, "Noncommuting", "M" + std::to_string(i + 1) + " and M" + std::to_string(j + 1)};
  MonomialEvaluator ev(std::vector<RatMatrix>(mults.begin(), mults.end()));
  for (std::size_t i = 0; i < f.polys.size(); ++i)
    if (!eval_at_matrices(f.polys[i], ev).is_zero())
      return CertFailure{5, "NonMember", "polynomial " + std::to_string(i + 1) + " does not vanish at M"};
  return std::nullopt;
}

std::optional<CertFailure> check_traces(const HermitePlus& hplus, std::span<const RatMatrix> mults) {
  MonomialEvaluator ev(std::vector<RatMatrix>(mults.begin(), mults.end()));
  const auto& labels = hplus.matrix.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) {
      const Rational& t = ev.trace(labels[i] * labels[j]);
      if (t != hplus.matrix(i, j))
        return CertFailure{6, "TraceMismatch",
                           "entry " + entry_text(i, j) + ": trace " + to_string(t) + ", matrix " +
                               to_string(hplus.matrix(i, j))};
      if (hplus.matrix(j, i) != hplus.matrix(i, j))
        return CertFailure{6, "TraceMismatch", "entry " + entry_text(j, i) + " breaks symmetry"};
    }
  return std::nullopt;
}

std::variant<RatMatrix, CertFailure> hermite_for_g(const RatMatrix& h1, std::span<const RatMatrix> mults,
                                                   const MultiPoly& g) {
  RatMatrix hg = h1 * eval_at_matrices(g, mults);
  if (!hg.is_symmetric()) return CertFailure{7, "NotSymmetric", "H1 * g(M) is not symmetric"};
  return hg;
}

namespace {

void require_arity(const PolySystem& f, const MultiPoly& g, const HermitePlus& hplus) {
  if (f.ring.size() != hplus.basis.arity())
    throw std::invalid_argument("system has " + std::to_string(f.ring.size()) + " variables but basis has arity " +
                                std::to_string(hplus.basis.arity()));
  if (g.ring().size() != f.ring.size() && !(g.ring().size() == 0 && g.total_degree() == 0))
    throw std::invalid_argument("g is over a different ring than the system");
}

// Runs Steps 1-5, returning the multiplication matrices when all pass.
std::optional<std::vector<RatMatrix>> run_steps_1_to_5(const PolySystem& f, const HermitePlus& hplus,
                                                       const CertifyOptions& options, CertificationOutcome& out) {
  HermiteBlocks blocks;
  try {
    blocks = extract_blocks(hplus);
  } catch (const MissingLabelError& e) {
    out.failure = CertFailure{1, "MissingLabel", e.what()};
    return std::nullopt;
  }
  out.diagnostics.push_back("step 1: extracted H1 and " + std::to_string(blocks.hx.size()) + " shifted blocks");

  auto mults = compute_mult_matrices(blocks, hplus.matrix);
  if (auto* fail = std::get_if<CertFailure>(&mults)) {
    out.failure = *fail;
    return std::nullopt;
  }
  std::vector<RatMatrix> m = std::get<std::vector<RatMatrix>>(std::move(mults));
  out.diagnostics.push_back("step 2: rank " + std::to_string(blocks.h1.rows()) + ", multiplication matrices formed");

  if (auto fail = check_identity_rows(m, hplus.basis)) {
    out.failure = fail;
    return std::nullopt;
  }
  out.diagnostics.push_back("step 3: basis identities hold");

  const auto candidates =
      generic_combinations(m.size(), hplus.basis.size(), options.seed, std::max(options.retries, 1));
  if (auto fail = check_squarefree(m, candidates)) {
    out.failure = fail;
    return std::nullopt;
  }
  out.diagnostics.push_back("step 4: generic combination is squarefree");

  if (auto fail = check_commute_and_membership(m, f)) {
    out.failure = fail;
    return std::nullopt;
  }
  out.diagnostics.push_back("step 5: matrices commute and annihilate the system");
  return m;
}

MultiPoly align(const MultiPoly& g, const Ring& ring) {
  if (g.ring() == ring) return g;
  if (g.ring().size() == 0) return MultiPoly::constant(ring, g.constant_term());
  return g.in_ring(ring);
}

}  // namespace

CertificationOutcome certify_pipeline(const PolySystem& f, const MultiPoly& g, const HermitePlus& hplus,
                                      const CertifyOptions& options) {
  require_arity(f, g, hplus);
  CertificationOutcome out;
  out.basis = hplus.basis;
  auto m = run_steps_1_to_5(f, hplus, options, out);
  if (!m) return out;

  if (auto fail = check_traces(hplus, *m)) {
    out.failure = fail;
    return out;
  }
  out.diagnostics.push_back("step 6: traces reproduce the extended matrix");

  const RatMatrix h1 = extract_blocks(hplus).h1;
  auto hg = hermite_for_g(h1, *m, align(g, f.ring));
  if (auto* fail = std::get_if<CertFailure>(&hg)) {
    out.failure = *fail;
    return out;
  }
  out.diagnostics.push_back("step 7: H_g derived");
  out.h1 = h1;
  out.hg = std::get<RatMatrix>(std::move(hg));
  out.mult_matrices = std::move(*m);
  return out;
}

std::optional<CertFailure> certify_univariate_fastpath(const HermitePlus& hplus, const RatMatrix& m1) {
  const std::size_t k = hplus.basis.size();
  const std::size_t n = hplus.basis.arity();
  if (hplus.basis != MonomialBasis::univariate(n, k))
    throw std::invalid_argument("fast path needs the basis 1, x, ..., x^(k-1)");
  if (m1.rows() != k || m1.cols() != k) throw std::invalid_argument("M1 must be k x k");

  // Companion structure: x * x^i = x^(i+1) for i < k - 1.
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t r = 0; r < k; ++r)
      if (m1(r, i) != (r == i + 1 ? 1 : 0))
        return CertFailure{3, "NotCompanion", "column " + std::to_string(i) + " of M1"};

  const auto sums = newton_girard_power_sums(char_poly(m1), 2 * k + 2);
  const auto& labels = hplus.matrix.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      // Extended labels of a univariate basis in n variables involve other
      // variables only through x_s * b; those entries are not power sums of x1.
      const Monomial alpha = labels[i] * labels[j];
      if (alpha.degree() != alpha[0]) continue;
      if (sums[alpha.degree()] != hplus.matrix(i, j))
        return CertFailure{6, "PowerSumMismatch",
                           "entry " + entry_text(i, j) + ": power sum " + to_string(sums[alpha.degree()]) +
                               ", matrix " + to_string(hplus.matrix(i, j))};
    }
  return std::nullopt;
}

CertificationOutcome certify_nonradical(const PolySystem& f, const MultiPoly& g, const HermitePlus& hbar,
                                        const CertifyOptions& options) {
  require_arity(f, g, hbar);
  if (!hbar.total_points) throw std::invalid_argument("non-radical certification needs the total point count");
  CertificationOutcome out;
  out.basis = hbar.basis;
  auto m = run_steps_1_to_5(f, hbar, options, out);
  if (!m) return out;

  // The literal trace comparison fails on weighted entries whenever a root
  // is repeated; it is logged, not enforced.
  if (auto mismatch = check_traces(hbar, *m))
    out.diagnostics.push_back("step 6: weighted matrix differs from radical traces, " + mismatch->detail);
  else
    out.diagnostics.push_back("step 6: weighted matrix equals radical traces");

  const HermiteBlocks blocks = extract_blocks(hbar);
  for (std::size_t s = 0; s < m->size(); ++s)
    if (blocks.h1 * (*m)[s] != blocks.hx[s]) {
      out.failure = CertFailure{6, "WeightedInconsistent", "H1 * M" + std::to_string(s + 1) + " differs from H1^x"};
      return out;
    }
  if (blocks.h1(0, 0) != Rational(static_cast<unsigned long>(*hbar.total_points))) {
    out.failure = CertFailure{6, "WeightMismatch",
                              "H1[1,1] = " + to_string(blocks.h1(0, 0)) + " but " +
                                  std::to_string(*hbar.total_points) + " points were supplied"};
    return out;
  }

  MonomialEvaluator ev(*m);
  const std::size_t k = hbar.basis.size();
  RatMatrix h1(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h1(i, j) = ev.trace(hbar.basis[i] * hbar.basis[j]);
  out.diagnostics.push_back("step 6: radical H1 rebuilt from traces");

  const MultiPoly galigned = align(g, f.ring);
  auto hg = hermite_for_g(h1, *m, galigned);
  if (auto* fail = std::get_if<CertFailure>(&hg)) {
    out.failure = *fail;
    return out;
  }
  auto weighted = hermite_for_g(blocks.h1, *m, galigned);
  if (auto* fail = std::get_if<CertFailure>(&weighted)) {
    out.failure = *fail;
    return out;
  }
  const long sigma_trace = inertia_ldl(std::get<RatMatrix>(hg)).signature();
  const long sigma_weighted = inertia_ldl(std::get<RatMatrix>(weighted)).signature();
  if (sigma_trace != sigma_weighted) {
    out.failure = CertFailure{7, "WeightedSignatureMismatch",
                              "trace-based signature " + std::to_string(sigma_trace) + ", weighted " +
                                  std::to_string(sigma_weighted)};
    return out;
  }
  out.diagnostics.push_back("step 7: radical H_g derived, signature agrees with weighted matrix");
  out.h1 = std::move(h1);
  out.hg = std::get<RatMatrix>(std::move(hg));
  out.weighted_h1 = blocks.h1;
  out.weighted_hg = std::get<RatMatrix>(std::move(weighted));
  out.mult_matrices = std::move(*m);
  return out;
}

}  // namespace hermcert
