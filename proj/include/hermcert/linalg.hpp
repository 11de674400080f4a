#pragma once

// Exact dense linear algebra over Q.

#include "hermcert/rat_matrix.hpp"
#include "hermcert/upoly.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hermcert {

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

class NotSymmetricError : public std::runtime_error {
 public:
  NotSymmetricError() : std::runtime_error("matrix is not symmetric") {}
};

class NoConnectedSelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  bool operator==(const Inertia&) const = default;
};

// Fraction-free (Bareiss) elimination on the row-scaled integer matrix.
std::size_t rank(const RatMatrix& a);

Rational determinant(const RatMatrix& a);

// Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& a);

// Symmetric elimination with diagonal pivots; when every remaining diagonal
// entry is zero but the block is not, a 2x2 pivot [[0,a],[a,0]] contributes
// one positive and one negative eigenvalue. Throws NotSymmetricError.
Inertia inertia_ldl(const RatMatrix& a);

// Monic characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier.
UPoly char_poly(const RatMatrix& a);

// Inertia read off the characteristic polynomial with Descartes' rule, exact
// because a symmetric matrix has only real eigenvalues.
Inertia inertia_descartes(const RatMatrix& a);
long signature_descartes(const RatMatrix& a);

struct ConnectedSelection {
  std::vector<std::size_t> indices;  // into the labels of H, in scan order
  std::vector<Monomial> monomials;
  RatMatrix submatrix;
};

// Greedy maximal nonsingular principal submatrix of a labeled symmetric H
// whose index set stays connected to 1. Monomials are scanned in basis order;
// one is kept when some quotient by a single variable is already kept and the
// enlarged principal minor is nonsingular. Throws NoConnectedSelectionError
// when the result falls short of rank(H).
ConnectedSelection max_nonsingular_connected_submatrix(const RatMatrix& h);

}  // namespace hermcert
