#pragma once

// Symbolic certification of a candidate extended Hermite matrix against a
// polynomial system, and derivation of certified H_g.

#include "hermcert/hermite.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hermcert {

struct CertFailure {
  int step = 0;
  std::string reason;  // machine-readable tag, e.g. "RankDeficient"
  std::string detail;
};

struct CertificationOutcome {
  MonomialBasis basis;
  std::optional<CertFailure> failure;
  std::optional<RatMatrix> h1;
  std::optional<RatMatrix> hg;
  std::vector<RatMatrix> mult_matrices;
  std::vector<std::string> diagnostics;  // one line per step reached
  // Non-radical route: the multiplicity-weighted matrices read from the input.
  std::optional<RatMatrix> weighted_h1;
  std::optional<RatMatrix> weighted_hg;

  bool certified() const { return !failure.has_value(); }
  // Highest step that ran, failed or not.
  int last_step() const;
};

struct CertifyOptions {
  std::uint64_t seed = 20240601;
  int retries = 3;
};

class MissingLabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HermiteBlocks {
  RatMatrix h1;               // rows and columns B
  std::vector<RatMatrix> hx;  // rows B, columns x_s * B
};

HermiteBlocks extract_blocks(const HermitePlus& hplus);

// M_s = H1^-1 H1^(x_s), after checking rank H1 = rank H+ = k.
std::variant<std::vector<RatMatrix>, CertFailure> compute_mult_matrices(const HermiteBlocks& blocks,
                                                                        const RatMatrix& hplus);

// M_s is the transpose of the multiplication map, so x_s * b_i = b_j in B
// requires column i of M_s to be e_j.
std::optional<CertFailure> check_identity_rows(std::span<const RatMatrix> mults, const MonomialBasis& basis);

// Candidate coefficient vectors for the generic combination: nonzero integer
// vectors in [-k^2, k^2] drawn from seed.
std::vector<std::vector<Rational>> generic_combinations(std::size_t variables, std::size_t k, std::uint64_t seed,
                                                        int count);

// Succeeds when some candidate c gives a squarefree characteristic polynomial
// of sum c_i M_i.
std::optional<CertFailure> check_squarefree(std::span<const RatMatrix> mults,
                                            std::span<const std::vector<Rational>> candidates);

std::optional<CertFailure> check_commute_and_membership(std::span<const RatMatrix> mults, const PolySystem& f);

// Tr((b_i b_j)(M)) against every entry of the extended matrix.
std::optional<CertFailure> check_traces(const HermitePlus& hplus, std::span<const RatMatrix> mults);

// H1 * g(M), required to be symmetric.
std::variant<RatMatrix, CertFailure> hermite_for_g(const RatMatrix& h1, std::span<const RatMatrix> mults,
                                                   const MultiPoly& g);

CertificationOutcome certify_pipeline(const PolySystem& f, const MultiPoly& g, const HermitePlus& hplus,
                                      const CertifyOptions& options = {});

// For B = {1, x, ..., x^(k-1)}: M1 must be a companion matrix and the power
// sums recovered from its characteristic polynomial must reproduce H+.
std::optional<CertFailure> certify_univariate_fastpath(const HermitePlus& hplus, const RatMatrix& m1);

// Steps 1-5 on the multiplicity-weighted matrix, then H1 and H_g of the
// radical rebuilt from traces of the certified multiplication matrices.
// hbar.total_points must be set.
CertificationOutcome certify_nonradical(const PolySystem& f, const MultiPoly& g, const HermitePlus& hbar,
                                        const CertifyOptions& options = {});

}  // namespace hermcert
