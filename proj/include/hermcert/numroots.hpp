#pragma once

// Floating-point frontend: Newton refinement, filtering of square-subsystem
// roots, Vandermonde conditioning and basis selection.

#include "hermcert/basis.hpp"
#include "hermcert/poly.hpp"
#include "hermcert/rat_matrix.hpp"
#include "hermcert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hermcert {

using ComplexPoint = std::vector<Complex>;

double norm2(std::span<const Complex> v);
double norm_inf(std::span<const Complex> v);

// Approximate roots with a common accuracy E and coordinate bound M. Every
// point satisfies ||z||_inf <= M - E. Radii, when present, are per-point
// distance bounds used by the filter.
class ApproxRootSet {
 public:
  ApproxRootSet(std::vector<ComplexPoint> points, Rational accuracy, Rational bound,
                std::vector<double> radii = {});

  const std::vector<ComplexPoint>& points() const { return points_; }
  const Rational& accuracy() const { return accuracy_; }
  const Rational& bound() const { return bound_; }
  const std::vector<double>& radii() const { return radii_; }
  std::size_t size() const { return points_.size(); }
  std::size_t arity() const { return points_.empty() ? 0 : points_.front().size(); }

 private:
  std::vector<ComplexPoint> points_;
  Rational accuracy_;
  Rational bound_;
  std::vector<double> radii_;
};

// Dense complex matrix with finite entries.
class FloatMatrix {
 public:
  FloatMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

double frobenius_distance(const FloatMatrix& a, const FloatMatrix& b);

class NewtonError : public std::runtime_error {
 public:
  enum class Kind { SingularJacobian, Diverged };
  NewtonError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct NewtonResult {
  ComplexPoint point;
  double residual = 0.0;
  std::size_t accepted_steps = 0;
  std::vector<double> residuals;  // after each accepted step, starting value first
};

inline constexpr double kJacobianConditionLimit = 1e12;

// Damped Newton: a step that raises the residual is halved up to 8 times and
// rejected if it still does; three consecutive rejections raise Diverged.
// Throws NewtonError.
NewtonResult newton_refine(const PolySystem& square, const ComplexPoint& start, int iterations);

struct SquareCombination {
  PolySystem system;
  RatMatrix combination;  // n x m, small integers, full row rank
};

// R o f for an n x m integer matrix R drawn deterministically from seed.
SquareCombination random_square_combination(const PolySystem& f, std::size_t n, std::uint64_t seed);

struct RadiusPoint {
  ComplexPoint point;
  double radius = 0.0;
};

struct FilterResult {
  std::vector<std::size_t> kept;       // indices into list A
  std::vector<std::size_t> discarded;  // indices into list A
  std::vector<RadiusPoint> kept_points;
  bool inconclusive = false;           // some point still matched several B points
};

// Radius after `rounds` Newton steps: eps / 2^(2^rounds - 1), floored at the
// double precision attainable near the point.
double contracted_radius(double radius, int rounds, std::span<const Complex> point);

// Drops points of list A that cannot approximate a common root of both
// square systems: a point whose ball meets no ball of list B is discarded;
// matching points are refined jointly until their balls separate (discard)
// or max_rounds is reached (keep). Never discards a true common root.
FilterResult match_and_filter(std::span<const RadiusPoint> list_a, std::span<const RadiusPoint> list_b,
                              const PolySystem& system_a, const PolySystem& system_b, int max_rounds);

// k x |basis| matrix of basis monomials evaluated at each point.
FloatMatrix vandermonde(std::span<const ComplexPoint> points, std::span<const Monomial> basis);

// Smallest singular value by one-sided Jacobi; +inf for zero columns.
// Requires rows >= cols.
double smallest_singular_value(const FloatMatrix& a);

// k n d M^(d-1) E: bound on the Frobenius distance between Vandermonde
// matrices of the exact and approximate points.
double vandermonde_perturbation_bound(std::size_t points, std::size_t variables, unsigned degree,
                                      double coordinate_bound, double accuracy);

class NoWellConditionedBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Greedy size-k basis in scan order. A monomial is tried once all its
// single-variable quotients are in the basis, and kept when the Vandermonde
// smallest singular value stays above vandermonde_perturbation_bound.
MonomialBasis select_basis(const ApproxRootSet& roots, const Ring& ring);

}  // namespace hermcert
