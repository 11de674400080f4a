#include "hermcert/poly.hpp"

#include <algorithm>
#include <cctype>

namespace hermcert {

MultiPoly MultiPoly::constant(const Ring& ring, const Rational& c) {
  return monomial(ring, Monomial::one(ring.size()), c);
}

MultiPoly MultiPoly::monomial(const Ring& ring, const Monomial& m, const Rational& c) {
  MultiPoly p(ring);
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring.size(), index));
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial::one(ring_.size())); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != ring_.size()) throw std::invalid_argument("monomial arity does not match ring");
  Rational value = c;
  value.canonicalize();
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::in_ring(const Ring& target) const {
  std::vector<std::size_t> where(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const auto idx = target.index_of(ring_.name(i));
    if (!idx) throw std::invalid_argument("variable '" + ring_.name(i) + "' missing from target ring");
    where[i] = *idx;
  }
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> exps(target.size(), 0);
    for (std::size_t i = 0; i < m.arity(); ++i) exps[where[i]] = m[i];
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("polynomials live in different rings");
  MultiPoly out(a.ring());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, Rational(ca * cb));
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly out = MultiPoly::constant(p.ring(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly out(ring_);
    skip_ws();
    if (at_end()) throw PolyParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) throw PolyParseError("empty polynomial", pos_);
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw PolyParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      }
      auto [mono, coeff] = parse_term();
      if (sign < 0) coeff = -coeff;
      out.add_term(mono, coeff);
      first = false;
    }
    return out;
  }

  Monomial parse_single_monomial() {
    skip_ws();
    auto [mono, coeff] = parse_term();
    skip_ws();
    if (!at_end()) throw PolyParseError("trailing input after monomial", pos_);
    if (coeff != 1) throw PolyParseError("monomial must have coefficient 1", 0);
    return mono;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial mono = Monomial::one(ring_.size());
    Rational coeff = 1;
    while (true) {
      skip_ws();
      if (at_end()) throw PolyParseError("expected a factor", pos_);
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        mono = mono * parse_power();
      } else {
        throw PolyParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {mono, coeff};
  }

  Rational parse_number() {
    const Integer num = parse_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const Integer den = parse_digits();
      if (den == 0) throw PolyParseError("zero denominator", at);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw PolyParseError("expected digits", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Monomial parse_power() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto idx = ring_.index_of(name);
    if (!idx) throw PolyParseError("unknown variable '" + name + "'", start);
    std::uint32_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const Integer e = parse_digits();
      if (e > 100000) throw PolyParseError("exponent too large", at);
      exponent = static_cast<std::uint32_t>(e.get_ui());
    }
    Monomial m = Monomial::one(ring_.size());
    for (std::uint32_t i = 0; i < exponent; ++i) m = m * Monomial::variable(ring_.size(), *idx);
    return m;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

Monomial parse_monomial(std::string_view text, const Ring& ring) {
  return PolyParser(text, ring).parse_single_monomial();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_string(m, p.ring());
    }
    first = false;
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index) {
  if (var_index >= p.ring().size()) throw std::out_of_range("derivative variable index out of range");
  MultiPoly out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[var_index];
    if (e == 0) continue;
    out.add_term(*m.divided_by_variable(var_index), Rational(c * e));
  }
  return out;
}

Complex eval_monomial(const Monomial& m, std::span<const Complex> point) {
  if (point.size() != m.arity()) throw std::invalid_argument("point arity does not match monomial");
  Complex v(1.0, 0.0);
  for (std::size_t i = 0; i < m.arity(); ++i)
    for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
  return v;
}

Complex eval_complex(const MultiPoly& p, std::span<const Complex> point) {
  if (point.size() != p.ring().size()) throw std::invalid_argument("point arity does not match ring");
  Complex sum(0.0, 0.0);
  for (const auto& [m, c] : p.terms()) sum += c.get_d() * eval_monomial(m, point);
  return sum;
}

Rational eval_rational(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.ring().size()) throw std::invalid_argument("point arity does not match ring");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.arity(); ++i) term *= pow(point[i], m[i]);
    sum += term;
  }
  return sum;
}

MonomialEvaluator::MonomialEvaluator(std::vector<RatMatrix> mats) : mats_(std::move(mats)) {
  if (!mats_.empty()) dim_ = mats_.front().rows();
  for (const auto& m : mats_)
    if (!m.is_square() || m.rows() != dim_) throw std::invalid_argument("matrix family must be square of equal size");
}

const RatMatrix& MonomialEvaluator::eval(const Monomial& m) {
  if (m.arity() != mats_.size()) throw std::invalid_argument("monomial arity does not match matrix count");
  if (const auto it = cache_.find(m); it != cache_.end()) return it->second;
  if (m.is_one()) return cache_.emplace(m, RatMatrix::identity(dim_)).first->second;
  std::size_t var = 0;
  while (m[var] == 0) ++var;
  const RatMatrix& parent = eval(*m.divided_by_variable(var));
  RatMatrix value = parent * mats_[var];
  return cache_.emplace(m, std::move(value)).first->second;
}

const Rational& MonomialEvaluator::trace(const Monomial& m) {
  if (const auto it = traces_.find(m); it != traces_.end()) return it->second;
  return traces_.emplace(m, eval(m).trace()).first->second;
}

RatMatrix eval_at_matrices(const MultiPoly& p, MonomialEvaluator& evaluator) {
  const std::size_t k = evaluator.dimension();
  RatMatrix out(k, k);
  for (const auto& [m, c] : p.terms()) out += c * evaluator.eval(m);
  return out;
}

RatMatrix eval_at_matrices(const MultiPoly& p, std::span<const RatMatrix> mats) {
  if (mats.size() != p.ring().size()) throw std::invalid_argument("matrix count does not match ring arity");
  MonomialEvaluator evaluator(std::vector<RatMatrix>(mats.begin(), mats.end()));
  return eval_at_matrices(p, evaluator);
}

}  // namespace hermcert
