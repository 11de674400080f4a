#include "hermcert/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hermcert {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer_digits(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  auto fail = [&]() -> Rational { throw std::invalid_argument("malformed rational: '" + original + "'"); };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail();

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const Integer d = parse_integer_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = make_rational(parse_integer_digits(num), d);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto whole = mantissa.substr(0, dot);
      const auto frac = mantissa.substr(dot + 1);
      if (whole.empty() && frac.empty()) return fail();
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return fail();
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    }
    Integer num = parse_integer_digits(digits);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    value = exponent >= 0 ? make_rational(num * scale, 1) : make_rational(num, scale);
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot convert a non-finite double to a rational");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);  // exact
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil_sqrt(const Rational& value) {
  if (value < 0) throw std::domain_error("ceil_sqrt of a negative value");
  Integer root;
  const Integer whole = floor(value);
  mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
  const Integer& a = value.get_num();
  const Integer& b = value.get_den();
  while (Integer(root * root * b) < a) ++root;
  return root;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

std::vector<Rational> convergents(const Rational& alpha) {
  if (alpha < 0) throw std::invalid_argument("convergents: alpha must be non-negative");
  std::vector<Rational> out;
  Integer n = alpha.get_num();
  Integer d = alpha.get_den();
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  while (d != 0) {
    Integer a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    out.push_back(make_rational(h, k));
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    n = d;
    d = r;
  }
  return out;
}

std::optional<Rational> rational_reconstruct(const Rational& alpha, const Integer& bound) {
  if (bound < 1) throw std::invalid_argument("rational_reconstruct: bound must be >= 1");
  const bool negative = alpha < 0;
  const Rational target = negative ? Rational(-alpha) : alpha;
  const Integer two_b2 = 2 * bound * bound;

  // Same recurrence as convergents(), stopped once denominators pass the bound.
  Integer n = target.get_num();
  Integer d = target.get_den();
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  while (d != 0) {
    Integer a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > bound) break;
    // |target - h/k| < 1/(2B^2)  <=>  2B^2 |num*k - h*den| < k*den
    Integer gap = target.get_num() * k - h * target.get_den();
    if (gap < 0) gap = -gap;
    if (Integer(two_b2 * gap) < Integer(k * target.get_den())) {
      Rational found = make_rational(h, k);
      return negative ? Rational(-found) : found;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    n = d;
    d = r;
  }
  return std::nullopt;
}

Rational power_sum_error_bound(const Rational& accuracy, std::size_t points, std::size_t variables,
                               unsigned degree, const Rational& coordinate_bound) {
  if (degree == 0) return Rational(0);
  return accuracy * Rational(static_cast<unsigned long>(points)) *
         Rational(static_cast<unsigned long>(variables)) * Rational(degree) *
         pow(coordinate_bound, degree - 1);
}

std::optional<Integer> denominator_bound(const Rational& accuracy, std::size_t points,
                                         std::size_t variables, unsigned degree,
                                         const Rational& coordinate_bound) {
  if (accuracy <= 0 || coordinate_bound <= 0)
    throw std::invalid_argument("denominator_bound: E and M must be positive");
  if (points == 0 || variables == 0 || degree == 0)
    throw std::invalid_argument("denominator_bound: k, n, d must be >= 1");
  const Rational x = 2 * power_sum_error_bound(accuracy, points, variables, degree, coordinate_bound);
  if (x >= 1) return std::nullopt;
  const Rational inverse = 1 / x;
  return ceil_sqrt(inverse);
}

}  // namespace hermcert
