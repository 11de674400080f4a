#pragma once

#include "hermcert/monomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hermcert {

// Every non-constant monomial has a single-variable quotient in the set, and
// the set contains 1.
bool is_connected_to_one(std::span<const Monomial> monomials);

// Ordered monomial set connected to 1 whose first element is 1.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  // Throws std::invalid_argument when the invariants do not hold.
  explicit MonomialBasis(std::vector<Monomial> monomials);

  // 1, x, ..., x^(k-1) in the first variable.
  static MonomialBasis univariate(std::size_t arity, std::size_t k);
  // The first k monomials in basis scan order; always connected to 1.
  static MonomialBasis leading(std::size_t arity, std::size_t k);

  std::size_t size() const { return monomials_.size(); }
  std::size_t arity() const { return monomials_.empty() ? 0 : monomials_.front().arity(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  unsigned max_degree() const;

  bool operator==(const MonomialBasis&) const = default;

 private:
  std::vector<Monomial> monomials_;
};

// B followed by x_i * B for each variable in order, duplicates dropped.
std::vector<Monomial> extended_monomials(const MonomialBasis& base);

}  // namespace hermcert
