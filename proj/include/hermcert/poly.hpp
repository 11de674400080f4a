#pragma once

#include "hermcert/monomial.hpp"
#include "hermcert/rat_matrix.hpp"
#include "hermcert/rational.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hermcert {

using Complex = std::complex<double>;

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Multivariate polynomial over Q. Terms are kept in descending grlex order and
// never store a zero coefficient.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  static MultiPoly constant(const Ring& ring, const Rational& c);
  static MultiPoly monomial(const Ring& ring, const Monomial& m, const Rational& c = 1);
  static MultiPoly variable(const Ring& ring, std::size_t index);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Adds c * m, dropping the term when it cancels.
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& other) const { return ring_ == other.ring_ && terms_ == other.terms_; }

  // Re-express in `target`, which must contain every variable of this ring.
  MultiPoly in_ring(const Ring& target) const;

 private:
  void require_same_ring(const MultiPoly& other) const;

  Ring ring_;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, MultiPoly a);
MultiPoly pow(const MultiPoly& p, unsigned exponent);

struct PolySystem {
  Ring ring;
  std::vector<MultiPoly> polys;

  std::size_t size() const { return polys.size(); }
};

// Grammar: terms joined by + / -; a term is an optional rational coefficient
// ("p/q" or integer) and "*"-separated factors "name^e". Whitespace ignored.
MultiPoly parse_poly(std::string_view text, const Ring& ring);
Monomial parse_monomial(std::string_view text, const Ring& ring);

// Canonical text; parse_poly(to_string(p), ring) == p.
std::string to_string(const MultiPoly& p);

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index);

Complex eval_monomial(const Monomial& m, std::span<const Complex> point);
Complex eval_complex(const MultiPoly& p, std::span<const Complex> point);
Rational eval_rational(const MultiPoly& p, std::span<const Rational> point);

// Memoized x^alpha(M_1, ..., M_n) for a fixed commuting family. Each new
// monomial costs one matrix product on top of a cached divisor.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(std::vector<RatMatrix> mats);

  const RatMatrix& eval(const Monomial& m);
  const Rational& trace(const Monomial& m);
  std::size_t dimension() const { return dim_; }

 private:
  std::vector<RatMatrix> mats_;
  std::size_t dim_ = 0;
  std::map<Monomial, RatMatrix> cache_;
  std::map<Monomial, Rational> traces_;
};

// p(M_1, ..., M_n); the constant term contributes c * I. Commutativity is the
// caller's precondition and is not checked here.
RatMatrix eval_at_matrices(const MultiPoly& p, std::span<const RatMatrix> mats);
RatMatrix eval_at_matrices(const MultiPoly& p, MonomialEvaluator& evaluator);

}  // namespace hermcert
