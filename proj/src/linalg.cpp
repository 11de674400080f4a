#include "hermcert/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hermcert {

namespace {

// Rows scaled by the lcm of their denominators; rank is unchanged.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& a) {
  std::vector<std::vector<Integer>> out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return out;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
  auto m = integer_rows(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Inertia inertia_ldl(const RatMatrix& a) {
  if (!a.is_symmetric()) throw NotSymmetricError();
  RatMatrix s = a;
  std::vector<std::size_t> active(a.rows());
  std::iota(active.begin(), active.end(), 0);
  Inertia out;

  auto remove = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    const auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return s(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational d = s(p, p);
      (d > 0 ? out.positive : out.negative) += 1;
      remove(p);
      for (std::size_t i : active) {
        if (s(i, p) == 0) continue;
        const Rational f = s(i, p) / d;
        for (std::size_t j : active) s(i, j) -= f * s(p, j);
      }
      continue;
    }
    // Every remaining diagonal entry is zero; look for an off-diagonal pivot.
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t x = 0; x < active.size() && !found; ++x)
      for (std::size_t y = x + 1; y < active.size() && !found; ++y)
        if (s(active[x], active[y]) != 0) {
          p = active[x];
          q = active[y];
          found = true;
        }
    if (!found) {
      out.zero += active.size();
      break;
    }
    out.positive += 1;
    out.negative += 1;
    remove(p);
    remove(q);
    // Schur complement against [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]].
    const Rational inv_b = 1 / s(p, q);
    std::vector<Rational> col_p, col_q;
    for (std::size_t i : active) {
      col_p.push_back(s(i, p));
      col_q.push_back(s(i, q));
    }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y)
        s(active[x], active[y]) -= (col_p[x] * col_q[y] + col_q[x] * col_p[y]) * inv_b;
  }
  return out;
}

UPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  UPoly c(n + 1);
  c[n] = 1;
  RatMatrix am(n, n);  // A * M_{k-1}, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    am = a * mk;
    c[n - k] = -am.trace() / Rational(static_cast<unsigned long>(k));
  }
  return c;
}

Inertia inertia_descartes(const RatMatrix& a) {
  if (!a.is_symmetric()) throw NotSymmetricError();
  const UPoly p = char_poly(a);
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  const UPoly reduced(p.begin() + static_cast<std::ptrdiff_t>(zeros), p.end());
  Inertia out;
  out.zero = zeros;
  out.positive = static_cast<std::size_t>(sign_variations(reduced));
  out.negative = static_cast<std::size_t>(sign_variations(upoly_reflect(reduced)));
  return out;
}

long signature_descartes(const RatMatrix& a) { return inertia_descartes(a).signature(); }

ConnectedSelection max_nonsingular_connected_submatrix(const RatMatrix& h) {
  if (!h.has_labels()) throw std::invalid_argument("connected submatrix search needs a labeled matrix");
  if (!h.is_symmetric()) throw NotSymmetricError();
  const auto& labels = h.labels();
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return BasisScanLess{}(labels[x], labels[y]); });

  ConnectedSelection sel;
  std::set<Monomial> chosen;
  for (std::size_t idx : order) {
    const Monomial& m = labels[idx];
    bool connected = m.is_one();
    for (std::size_t v = 0; v < m.arity() && !connected; ++v)
      if (const auto q = m.divided_by_variable(v)) connected = chosen.contains(*q);
    if (!connected) continue;
    std::vector<std::size_t> trial = sel.indices;
    trial.push_back(idx);
    if (determinant(h.principal_submatrix(trial)) == 0) continue;
    sel.indices = std::move(trial);
    sel.monomials.push_back(m);
    chosen.insert(m);
  }
  const std::size_t r = rank(h);
  if (sel.indices.size() != r)
    throw NoConnectedSelectionError("greedy scan found a connected nonsingular set of size " +
                                    std::to_string(sel.indices.size()) + " but rank is " + std::to_string(r));
  sel.submatrix = h.principal_submatrix(sel.indices);
  sel.submatrix.set_labels(sel.monomials);
  return sel;
}

}  // namespace hermcert
