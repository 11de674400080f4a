#include "hermcert/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermcert {

UPoly upoly_trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int upoly_degree(const UPoly& p) {
  const UPoly t = upoly_trim(p);
  return static_cast<int>(t.size()) - 1;
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(p[i] * static_cast<unsigned long>(i)));
  return upoly_trim(std::move(out));
}

UPoly upoly_remainder(const UPoly& a, const UPoly& b) {
  const UPoly divisor = upoly_trim(b);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  UPoly r = upoly_trim(a);
  const Rational& lead = divisor.back();
  while (r.size() >= divisor.size()) {
    const Rational factor = r.back() / lead;
    const std::size_t shift = r.size() - divisor.size();
    for (std::size_t i = 0; i < divisor.size(); ++i) r[shift + i] -= factor * divisor[i];
    r.back() = 0;  // exact cancellation of the leading term
    r = upoly_trim(std::move(r));
  }
  return r;
}

UPoly upoly_monic(const UPoly& p) {
  UPoly t = upoly_trim(p);
  if (t.empty()) return t;
  const Rational lead = t.back();
  for (auto& c : t) c /= lead;
  return t;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return upoly_trim(std::move(out));
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly upoly_reflect(const UPoly& p) {
  UPoly out(p);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

UPoly univariate_gcd(const UPoly& p, const UPoly& q) {
  UPoly a = upoly_monic(p);
  UPoly b = upoly_monic(q);
  if (a.empty() && b.empty()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.empty()) {
    UPoly r = upoly_monic(upoly_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_variations(std::span<const Rational> coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Rational> newton_girard_power_sums(const UPoly& monic, std::size_t upto) {
  const UPoly p = upoly_trim(monic);
  if (p.empty() || p.back() != 1) throw std::invalid_argument("newton_girard_power_sums needs a monic polynomial");
  const std::size_t k = p.size() - 1;
  // Write p = lambda^k + a_1 lambda^(k-1) + ... + a_k.
  auto a = [&](std::size_t i) -> const Rational& { return p[k - i]; };
  std::vector<Rational> sums(upto + 1);
  sums[0] = static_cast<unsigned long>(k);
  // m <= k: p_m + a_1 p_{m-1} + ... + a_{m-1} p_1 + m a_m = 0
  // m >  k: p_m + a_1 p_{m-1} + ... + a_k p_{m-k}     = 0
  for (std::size_t m = 1; m <= upto; ++m) {
    Rational acc = 0;
    const std::size_t lim = std::min(m - 1, k);
    for (std::size_t i = 1; i <= lim; ++i) acc += a(i) * sums[m - i];
    if (m <= k) acc += static_cast<unsigned long>(m) * a(m);
    sums[m] = -acc;
  }
  return sums;
}

}  // namespace hermcert
