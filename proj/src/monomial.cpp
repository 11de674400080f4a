#include "hermcert/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hermcert {

bool is_valid_variable_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_valid_variable_name(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

Ring Ring::generic(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Ring(std::move(all));
}

Monomial Monomial::variable(std::size_t arity, std::size_t index) {
  Monomial m(arity);
  m.exps_.at(index) = 1;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("monomial arity mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::optional<Monomial> Monomial::divided_by_variable(std::size_t i) const {
  if (exps_.at(i) == 0) return std::nullopt;
  Monomial out(*this);
  --out.exps_[i];
  return out;
}

Monomial Monomial::with_appended(std::size_t extra_vars) const {
  Monomial out(*this);
  out.exps_.resize(exps_.size() + extra_vars, 0);
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents() <=> b.exponents();
}

bool BasisScanLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.arity() != ring.size()) throw std::invalid_argument("monomial arity does not match ring");
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill_degree(std::vector<std::uint32_t>& exps, std::size_t pos, unsigned remaining,
                 std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[pos] = e;
    fill_degree(exps, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> exps(arity, 0);
  fill_degree(exps, 0, degree, out);
  return out;
}

}  // namespace hermcert
