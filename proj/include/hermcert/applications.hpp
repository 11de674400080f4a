#pragma once

// Signature-based certificates: real root counting, non-negativity of g on
// the real variety, and real roots inside a ball.

#include "hermcert/certify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermcert {

// Signature by LDL, cross-checked against Descartes on the characteristic
// polynomial. Throws std::logic_error if the two disagree.
long certified_signature(const RatMatrix& symmetric);

// Distinct real roots, from the signature of a certified H1.
long real_root_count(const RatMatrix& h1);

// f together with dg/dx_i + sum_j lambda_j df_j/dx_i, in the ring extended by
// multipliers lambda1, ..., lambdas (renamed if they clash with variables).
PolySystem lagrange_system(const PolySystem& f, const MultiPoly& g);

// d^(n+s) with d the largest total degree among g and the polynomials of f.
Integer bezout_bound(const PolySystem& f, const MultiPoly& g);

enum class VerdictKind { True, False, Fail };
std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Fail;
  std::optional<long> sigma_h1;
  std::optional<long> sigma_hg;
  std::optional<long> sigma_hg2;
  std::optional<RatMatrix> hg2;
  // Failures before certification starts carry step 0.
  CertificationOutcome certificate;
  std::vector<std::string> assumptions;
};

struct BallQuery {
  std::vector<Rational> center;
  Rational radius_squared;
};

// ||x - center||^2 - radius^2 over the given ring.
MultiPoly ball_polynomial(const Ring& ring, const BallQuery& query);

// True when the closed ball holds a real root, False when it holds none.
// Matrices carrying a total point count go through the non-radical route.
Verdict certify_ball(const PolySystem& f, const BallQuery& query, const HermitePlus& hplus,
                     const CertifyOptions& options = {});

// roots approximate the complex critical points of the Lagrange system of
// (f, g). True iff g >= 0 on the real variety of f, which the caller asserts
// is smooth and bounded.
Verdict certify_nonneg(const PolySystem& f, const MultiPoly& g, const ApproxRootSet& roots,
                       const CertifyOptions& options = {});

}  // namespace hermcert
