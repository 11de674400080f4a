#pragma once

// Test-side oracles and seeded generators. Nothing here calls the library
// routine it is used to check.

#include "hermcert/basis.hpp"
#include "hermcert/numroots.hpp"
#include "hermcert/poly.hpp"
#include "hermcert/rat_matrix.hpp"
#include "hermcert/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

namespace hermcert {

inline void PrintTo(const Monomial& m, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < m.arity(); ++i) *os << (i ? "," : "") << m[i];
  *os << "]";
}

inline void PrintTo(const RatMatrix& m, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    *os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? "," : "") << m(i, j).get_str();
    *os << "]";
  }
  *os << "]";
}

}  // namespace hermcert

namespace testsupport {

using hermcert::Integer;
using hermcert::Monomial;
using hermcert::RatMatrix;
using hermcert::Rational;

// gmpxx does not reduce num/den on construction; arithmetic assumes it.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_range, long max_den) {
    return frac(integer(-num_range, num_range), integer(1, max_den));
  }

  RatMatrix matrix(std::size_t rows, std::size_t cols, long num_range, long max_den) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(num_range, max_den);
    return m;
  }

  // Random symmetric matrix; with probability 1/2 it is rank-deficient or has
  // a zero diagonal so pivoting paths get exercised.
  RatMatrix symmetric(std::size_t n, long num_range, long max_den) {
    RatMatrix m(n, n);
    const int shape = static_cast<int>(integer(0, 3));
    if (shape == 0 && n > 1) {  // low rank: sum of r signed outer products
      const std::size_t r = static_cast<std::size_t>(integer(1, static_cast<long>(n) - 1));
      for (std::size_t t = 0; t < r; ++t) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = rational(num_range, max_den);
        const Rational s = coin() ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) += s * v[i] * v[j];
      }
      return m;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational v = (shape == 1 && i == j) ? Rational(0) : rational(num_range, max_den);
        if (shape == 2 && integer(0, 2) == 0) v = 0;
        m(i, j) = v;
        m(j, i) = v;
      }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Every p/q with q <= bound and |alpha - p/q| < 1/(2 bound^2), by scanning
// all denominators.
inline std::vector<Rational> brute_force_fractions(const Rational& alpha, long bound) {
  std::vector<Rational> out;
  const Rational tol(1, 2 * bound * bound);
  for (long q = 1; q <= bound; ++q) {
    const Rational scaled = alpha * q;
    Integer lo = scaled.get_num() / scaled.get_den();
    if (scaled < 0 && lo * scaled.get_den() != scaled.get_num()) lo -= 1;  // floor for negatives
    for (Integer p = lo - 1; p <= lo + 2; ++p) {
      Rational cand(p, q);
      cand.canonicalize();
      if (cand.get_den() != q) continue;  // counted at its reduced denominator
      Rational diff = alpha - cand;
      if (diff < 0) diff = -diff;
      if (diff < tol) out.push_back(cand);
    }
  }
  return out;
}

// Smallest r >= 1 with r^2 * x >= 1, for 0 < x < 1, by direct search from a
// floating estimate.
inline Integer ceil_inverse_sqrt(const Rational& x) {
  const double est = 1.0 / std::sqrt(x.get_d());
  Integer r = static_cast<long>(std::max(1.0, est - 3.0));
  while (Rational(r * r) * x < 1) ++r;
  while (r > 1 && Rational((r - 1) * (r - 1)) * x >= 1) --r;
  return r;
}

inline Rational rat_pow(const Rational& b, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= b;
  return out;
}

inline Rational monomial_at(const Monomial& m, const std::vector<Rational>& z) {
  Rational out = 1;
  for (std::size_t i = 0; i < m.arity(); ++i) out *= rat_pow(z[i], m[i]);
  return out;
}

// V^T diag(w) V for exact rational points: entry (i, j) = sum_t w_t z_t^(a_i + a_j).
inline RatMatrix exact_weighted_hermite(const std::vector<std::vector<Rational>>& points,
                                        const std::vector<Rational>& weights, const std::vector<Monomial>& labels) {
  const std::size_t l = labels.size();
  RatMatrix h(l, l);
  for (std::size_t t = 0; t < points.size(); ++t) {
    std::vector<Rational> vals;
    for (const auto& m : labels) vals.push_back(monomial_at(m, points[t]));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) h(i, j) += weights[t] * vals[i] * vals[j];
  }
  return h;
}

inline RatMatrix exact_hermite(const std::vector<std::vector<Rational>>& points, const std::vector<Monomial>& labels) {
  return exact_weighted_hermite(points, std::vector<Rational>(points.size(), Rational(1)), labels);
}

// Coefficients (lowest first) of prod (x - r_i) * prod (x^2 + b_j x + c_j).
inline std::vector<Rational> expand_roots(const std::vector<Rational>& roots,
                                          const std::vector<std::pair<Rational, Rational>>& quadratics) {
  std::vector<Rational> p{1};
  auto mul = [&](const std::vector<Rational>& f) {
    std::vector<Rational> out(p.size() + f.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += p[i] * f[j];
    p = std::move(out);
  };
  for (const auto& r : roots) mul({-r, 1});
  for (const auto& [b, c] : quadratics) mul({c, b, 1});
  return p;
}

// Text form of a univariate polynomial in x from low-first coefficients.
inline std::string univariate_text(const std::vector<Rational>& coeffs, const std::string& var = "x") {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    const bool negative = coeffs[i] < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    Rational magnitude = coeffs[i];
    if (negative) magnitude = -magnitude;
    out += magnitude.get_str();
    if (i > 0) out += "*" + var + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::vector<hermcert::Complex> to_complex(const std::vector<Rational>& z) {
  std::vector<hermcert::Complex> out;
  for (const auto& v : z) out.emplace_back(v.get_d(), 0.0);
  return out;
}

}  // namespace testsupport
