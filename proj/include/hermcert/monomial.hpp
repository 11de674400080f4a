#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hermcert {

// Ordered variable names of a polynomial ring.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);
  Ring(std::initializer_list<std::string> names) : Ring(std::vector<std::string>(names)) {}
  // x1, ..., xn
  static Ring generic(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // This ring followed by `extra` variables.
  Ring extended(const std::vector<std::string>& extra) const;

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> names_;
};

bool is_valid_variable_name(const std::string& name);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  // Exponent-wise lexicographic order; used for associative containers only.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // this / x_i, or nullopt when x_i does not divide.
  std::optional<Monomial> divided_by_variable(std::size_t i) const;
  Monomial with_appended(std::size_t extra_vars) const;

 private:
  std::vector<std::uint32_t> exps_;
};

// Graded lexicographic comparison with x_1 > x_2 > ... > x_n.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// Basis scan order: ascending total degree, and within a degree the
// grlex-largest first (1, x1, x2, ..., x1^2, x1*x2, ...).
struct BasisScanLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// "1", "x", "x^2*y". Parsing lives with the polynomial parser.
std::string to_string(const Monomial& m, const Ring& ring);

// All monomials of exactly the given degree, in basis scan order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned degree);

}  // namespace hermcert
