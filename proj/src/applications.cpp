#include "hermcert/applications.hpp"

#include "hermcert/linalg.hpp"

#include <stdexcept>

namespace hermcert {

long certified_signature(const RatMatrix& symmetric) {
  const long ldl = inertia_ldl(symmetric).signature();
  const long descartes = signature_descartes(symmetric);
  if (ldl != descartes)
    throw std::logic_error("signature methods disagree: LDL " + std::to_string(ldl) + ", Descartes " +
                           std::to_string(descartes));
  return ldl;
}

long real_root_count(const RatMatrix& h1) { return certified_signature(h1); }

namespace {

MultiPoly lift(const MultiPoly& p, const Ring& ring) {
  if (p.ring() == ring) return p;
  if (p.ring().size() == 0) return MultiPoly::constant(ring, p.constant_term());
  return p.in_ring(ring);
}

}  // namespace

PolySystem lagrange_system(const PolySystem& f, const MultiPoly& g) {
  const std::size_t n = f.ring.size();
  const std::size_t s = f.polys.size();
  std::vector<std::string> multipliers;
  for (std::size_t j = 1; j <= s; ++j) {
    std::string name = "lambda" + std::to_string(j);
    while (f.ring.index_of(name)) name += "_";
    multipliers.push_back(std::move(name));
  }
  const Ring ring = f.ring.extended(multipliers);
  const MultiPoly gl = lift(g, f.ring);

  PolySystem out{ring, {}};
  for (const auto& fj : f.polys) out.polys.push_back(fj.in_ring(ring));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly eq = partial_derivative(gl, i).in_ring(ring);
    for (std::size_t j = 0; j < s; ++j)
      eq += MultiPoly::variable(ring, n + j) * partial_derivative(f.polys[j], i).in_ring(ring);
    out.polys.push_back(std::move(eq));
  }
  return out;
}

Integer bezout_bound(const PolySystem& f, const MultiPoly& g) {
  unsigned d = g.total_degree();
  for (const auto& p : f.polys) d = std::max(d, p.total_degree());
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), d, f.ring.size() + f.polys.size());
  return out;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::True: return "true";
    case VerdictKind::False: return "false";
    case VerdictKind::Fail: return "fail";
  }
  return "fail";
}

MultiPoly ball_polynomial(const Ring& ring, const BallQuery& query) {
  if (query.center.size() != ring.size()) throw std::invalid_argument("ball center arity does not match the system");
  if (query.radius_squared <= 0) throw std::invalid_argument("squared radius must be positive");
  MultiPoly g = MultiPoly::constant(ring, -query.radius_squared);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const MultiPoly d = MultiPoly::variable(ring, i) - MultiPoly::constant(ring, query.center[i]);
    g += d * d;
  }
  return g;
}

Verdict certify_ball(const PolySystem& f, const BallQuery& query, const HermitePlus& hplus,
                     const CertifyOptions& options) {
  const MultiPoly g = ball_polynomial(f.ring, query);
  Verdict out;
  out.certificate = hplus.total_points ? certify_nonradical(f, g, hplus, options)
                                       : certify_pipeline(f, g, hplus, options);
  if (!out.certificate.certified()) return out;
  out.sigma_h1 = certified_signature(*out.certificate.h1);
  out.sigma_hg = certified_signature(*out.certificate.hg);
  out.kind = *out.sigma_h1 == *out.sigma_hg ? VerdictKind::False : VerdictKind::True;
  return out;
}

namespace {

Verdict early_failure(const MonomialBasis& basis, const std::string& reason, const std::string& detail) {
  Verdict v;
  v.certificate.basis = basis;
  v.certificate.failure = CertFailure{0, reason, detail};
  return v;
}

}  // namespace

Verdict certify_nonneg(const PolySystem& f, const MultiPoly& g, const ApproxRootSet& roots,
                       const CertifyOptions& options) {
  if (f.polys.size() > f.ring.size())
    throw std::invalid_argument("non-negativity needs at most as many constraints as variables");
  const PolySystem lagrange = lagrange_system(f, g);
  if (roots.arity() != lagrange.ring.size())
    throw std::invalid_argument("critical points must have " + std::to_string(lagrange.ring.size()) +
                                " coordinates");

  const double two_e = 2.0 * to_double(roots.accuracy());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      ComplexPoint diff = roots.points()[i];
      for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= roots.points()[j][t];
      if (norm2(diff) <= two_e)
        return early_failure({}, "DuplicateRoots",
                             "points " + std::to_string(i) + " and " + std::to_string(j) + " are within 2E");
    }

  MonomialBasis basis;
  try {
    basis = select_basis(roots, lagrange.ring);
  } catch (const NoWellConditionedBasisError& e) {
    return early_failure({}, "NoWellConditionedBasis", e.what());
  }
  HermitePlus hplus;
  try {
    hplus = build_hermite(roots, basis);
  } catch (const ReconstructionError& e) {
    return early_failure(basis, "ReconstructionFailed", e.what());
  }

  const MultiPoly gl = lift(g, f.ring).in_ring(lagrange.ring);
  Verdict out;
  out.assumptions.push_back("real variety of f is smooth and bounded");
  out.certificate = certify_pipeline(lagrange, gl, hplus, options);
  if (!out.certificate.certified()) return out;

  auto hg2 = hermite_for_g(*out.certificate.h1, out.certificate.mult_matrices, gl * gl);
  if (auto* fail = std::get_if<CertFailure>(&hg2)) {
    out.certificate.failure = *fail;
    return out;
  }
  out.sigma_h1 = certified_signature(*out.certificate.h1);
  out.sigma_hg = certified_signature(*out.certificate.hg);
  out.hg2 = std::get<RatMatrix>(std::move(hg2));
  out.sigma_hg2 = certified_signature(*out.hg2);
  out.kind = *out.sigma_hg == *out.sigma_hg2 ? VerdictKind::True : VerdictKind::False;
  return out;
}

}  // namespace hermcert
