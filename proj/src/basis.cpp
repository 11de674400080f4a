#include "hermcert/basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hermcert {

bool is_connected_to_one(std::span<const Monomial> monomials) {
  const std::set<Monomial> members(monomials.begin(), monomials.end());
  bool has_one = false;
  for (const auto& m : monomials) {
    if (m.is_one()) {
      has_one = true;
      continue;
    }
    bool reached = false;
    for (std::size_t v = 0; v < m.arity() && !reached; ++v)
      if (const auto q = m.divided_by_variable(v)) reached = members.contains(*q);
    if (!reached) return false;
  }
  return has_one;
}

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  if (monomials_.empty()) throw std::invalid_argument("basis must not be empty");
  if (!monomials_.front().is_one()) throw std::invalid_argument("basis must start with 1");
  const std::size_t n = monomials_.front().arity();
  std::set<Monomial> seen;
  for (const auto& m : monomials_) {
    if (m.arity() != n) throw std::invalid_argument("basis monomials differ in arity");
    if (!seen.insert(m).second) throw std::invalid_argument("basis monomials must be distinct");
  }
  if (!is_connected_to_one(monomials_)) throw std::invalid_argument("basis is not connected to 1");
}

MonomialBasis MonomialBasis::univariate(std::size_t arity, std::size_t k) {
  std::vector<Monomial> ms;
  Monomial m = Monomial::one(arity);
  for (std::size_t i = 0; i < k; ++i) {
    ms.push_back(m);
    m = m * Monomial::variable(arity, 0);
  }
  return MonomialBasis(std::move(ms));
}

MonomialBasis MonomialBasis::leading(std::size_t arity, std::size_t k) {
  std::vector<Monomial> ms;
  for (unsigned d = 0; ms.size() < k; ++d)
    for (auto& m : monomials_of_degree(arity, d)) {
      if (ms.size() == k) break;
      ms.push_back(std::move(m));
    }
  return MonomialBasis(std::move(ms));
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  const auto it = std::find(monomials_.begin(), monomials_.end(), m);
  if (it == monomials_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

unsigned MonomialBasis::max_degree() const {
  unsigned d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

std::vector<Monomial> extended_monomials(const MonomialBasis& base) {
  std::vector<Monomial> out(base.begin(), base.end());
  std::set<Monomial> seen(base.begin(), base.end());
  for (std::size_t v = 0; v < base.arity(); ++v)
    for (const auto& b : base) {
      Monomial m = b * Monomial::variable(base.arity(), v);
      if (seen.insert(m).second) out.push_back(std::move(m));
    }
  return out;
}

}  // namespace hermcert
