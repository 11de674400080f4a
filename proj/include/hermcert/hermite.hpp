#pragma once

// Approximate extended Hermite matrices from points and their exact rational
// reconstruction.

#include "hermcert/basis.hpp"
#include "hermcert/numroots.hpp"
#include "hermcert/rat_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermcert {

struct ReconstructionProvenance {
  Rational accuracy;  // E
  Rational bound;     // M
  std::size_t points = 0;
  std::size_t variables = 0;
  // Denominator bound used for each distinct monomial product, in first-seen order.
  std::vector<std::pair<Monomial, Integer>> denominator_bounds;
};

// Exact candidate for the extended Hermite matrix. The matrix is labeled with
// extended_monomials(basis).
struct HermitePlus {
  MonomialBasis basis;
  RatMatrix matrix;
  std::optional<ReconstructionProvenance> provenance;
  // Set for matrices whose basis was reduced from a multiplicity-weighted point set.
  std::optional<std::size_t> total_points;
};

// Wraps a labeled matrix, checking symmetry and that the labels are the
// extension of the basis.
HermitePlus make_hermite_plus(MonomialBasis basis, RatMatrix matrix);

// Sum over points of g(z) z^(a_i + a_j), one distinct exponent at a time.
FloatMatrix approx_extended_hermite(const ApproxRootSet& points, std::span<const Monomial> labels,
                                    const MultiPoly& g);
FloatMatrix approx_extended_hermite(const ApproxRootSet& points, std::span<const Monomial> labels);

class ReconstructionError : public std::runtime_error {
 public:
  enum class Reason { NotFound, NotUsable, ImaginaryTooLarge };
  ReconstructionError(std::size_t row, std::size_t col, Monomial product, Reason reason);

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }
  const Monomial& product() const { return product_; }
  Reason reason() const { return reason_; }

 private:
  std::size_t row_;
  std::size_t col_;
  Monomial product_;
  Reason reason_;
};

std::string to_string(ReconstructionError::Reason reason);

// Rationalizes each distinct monomial product once with the denominator bound
// for its degree (degree-0 products use the degree-1 bound).
HermitePlus reconstruct_hermite(const FloatMatrix& approx, const MonomialBasis& basis, const Rational& accuracy,
                                std::size_t points, std::size_t variables, const Rational& bound);

HermitePlus build_hermite(const ApproxRootSet& points, const MonomialBasis& basis);

class NonRadicalRankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NonRadicalHermite {
  std::size_t reduced_size = 0;  // number of distinct roots
  MonomialBasis reduced_basis;
  HermitePlus reduced;  // indexed by the extension of reduced_basis, total_points set
  HermitePlus full;
};

// Points may repeat according to multiplicity. Throws NonRadicalRankError
// when the extended matrix has rank above the reduced size.
NonRadicalHermite build_nonradical(const ApproxRootSet& points, const MonomialBasis& basis);

}  // namespace hermcert
