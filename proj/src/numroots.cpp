#include "hermcert/numroots.hpp"

#include "hermcert/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace hermcert {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

double norm_inf(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

ApproxRootSet::ApproxRootSet(std::vector<ComplexPoint> points, Rational accuracy, Rational bound,
                             std::vector<double> radii)
    : points_(std::move(points)), accuracy_(std::move(accuracy)), bound_(std::move(bound)), radii_(std::move(radii)) {
  if (accuracy_ <= 0) throw std::invalid_argument("accuracy E must be positive");
  if (bound_ <= 0) throw std::invalid_argument("coordinate bound M must be positive");
  if (!radii_.empty() && radii_.size() != points_.size())
    throw std::invalid_argument("radii must match the number of points");
  for (double r : radii_)
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("radii must be positive and finite");
  const Rational limit = bound_ - accuracy_;
  for (const auto& p : points_) {
    if (p.size() != arity()) throw std::invalid_argument("points differ in arity");
    for (const auto& c : p) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw std::invalid_argument("non-finite coordinate");
      // |c| <= M - E, compared exactly on |c|^2 = re^2 + im^2.
      const Rational re = from_double(c.real());
      const Rational im = from_double(c.imag());
      if (limit < 0 || Rational(re * re + im * im) > Rational(limit * limit))
        throw std::invalid_argument("point coordinate exceeds M - E");
    }
  }
}

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match dimensions");
  for (const auto& c : entries_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw std::invalid_argument("non-finite matrix entry");
}

double frobenius_distance(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) s += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(s);
}

namespace {

struct SystemEvaluator {
  explicit SystemEvaluator(const PolySystem& sys) : system(sys) {
    if (sys.polys.size() != sys.ring.size())
      throw std::invalid_argument("Newton refinement needs a square system");
    for (const auto& p : sys.polys)
      for (std::size_t v = 0; v < sys.ring.size(); ++v) jacobian.push_back(partial_derivative(p, v));
  }

  std::vector<Complex> values(const ComplexPoint& z) const {
    std::vector<Complex> out;
    for (const auto& p : system.polys) out.push_back(eval_complex(p, z));
    return out;
  }

  double residual(const ComplexPoint& z) const { return norm2(values(z)); }

  const PolySystem& system;
  std::vector<MultiPoly> jacobian;  // row-major n x n
};

// Solves J x = rhs by Gaussian elimination with partial pivoting, rejecting
// J whose 1-norm condition estimate exceeds the limit.
std::vector<Complex> solve_checked(std::vector<Complex> j, std::vector<Complex> rhs) {
  const std::size_t n = rhs.size();
  double norm_j = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(j[r * n + c]);
    norm_j = std::max(norm_j, col);
  }
  std::vector<Complex> inv(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(j[r * n + c]) > std::abs(j[piv * n + c])) piv = r;
    if (std::abs(j[piv * n + c]) == 0.0) throw NewtonError(NewtonError::Kind::SingularJacobian, "singular Jacobian");
    if (piv != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(j[piv * n + k], j[c * n + k]);
        std::swap(inv[piv * n + k], inv[c * n + k]);
      }
    const Complex p = j[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      j[c * n + k] /= p;
      inv[c * n + k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Complex f = j[r * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        j[r * n + k] -= f * j[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  double norm_inv = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(inv[r * n + c]);
    norm_inv = std::max(norm_inv, col);
  }
  if (!(norm_j * norm_inv <= kJacobianConditionLimit))
    throw NewtonError(NewtonError::Kind::SingularJacobian, "Jacobian condition estimate exceeds limit");
  std::vector<Complex> x(n, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) x[r] += inv[r * n + k] * rhs[k];
  return x;
}

}  // namespace

NewtonResult newton_refine(const PolySystem& square, const ComplexPoint& start, int iterations) {
  const SystemEvaluator ev(square);
  if (start.size() != square.ring.size()) throw std::invalid_argument("start point arity does not match system");
  const std::size_t n = start.size();

  NewtonResult out;
  out.point = start;
  out.residual = ev.residual(start);
  out.residuals.push_back(out.residual);
  int rejected = 0;
  for (int it = 0; it < iterations; ++it) {
    if (out.residual == 0.0) break;
    std::vector<Complex> jac(n * n);
    for (std::size_t i = 0; i < n * n; ++i) jac[i] = eval_complex(ev.jacobian[i], out.point);
    const std::vector<Complex> step = solve_checked(std::move(jac), ev.values(out.point));
    if (norm2(step) <= 64.0 * DBL_EPSILON * std::max(1.0, norm2(out.point))) break;

    bool accepted = false;
    double scale = 1.0;
    for (int halving = 0; halving <= 8 && !accepted; ++halving, scale *= 0.5) {
      ComplexPoint trial = out.point;
      for (std::size_t i = 0; i < n; ++i) trial[i] -= scale * step[i];
      const double r = ev.residual(trial);
      if (r <= out.residual) {
        out.point = std::move(trial);
        out.residual = r;
        accepted = true;
      }
    }
    if (accepted) {
      rejected = 0;
      ++out.accepted_steps;
      out.residuals.push_back(out.residual);
    } else if (++rejected >= 3) {
      throw NewtonError(NewtonError::Kind::Diverged, "residual grew on three consecutive steps");
    }
  }
  return out;
}

SquareCombination random_square_combination(const PolySystem& f, std::size_t n, std::uint64_t seed) {
  const std::size_t m = f.polys.size();
  if (m < n) throw std::invalid_argument("need at least n polynomials to form a square combination");
  std::mt19937_64 rng(seed);
  RatMatrix r(n, m);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) r(i, j) = static_cast<long>(rng() % 19) - 9;
  } while (rank(r) < n);

  SquareCombination out{PolySystem{f.ring, {}}, r};
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly p(f.ring);
    for (std::size_t j = 0; j < m; ++j) p += r(i, j) * f.polys[j];
    out.system.polys.push_back(std::move(p));
  }
  return out;
}

double contracted_radius(double radius, int rounds, std::span<const Complex> point) {
  const int r = std::min(rounds, 11);
  const double contracted = std::ldexp(radius, -((1 << r) - 1));
  const double floor = 1024.0 * DBL_EPSILON * std::max(1.0, norm_inf(point));
  return std::max(contracted, floor);
}

namespace {

double distance(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

FilterResult match_and_filter(std::span<const RadiusPoint> list_a, std::span<const RadiusPoint> list_b,
                              const PolySystem& system_a, const PolySystem& system_b, int max_rounds) {
  FilterResult out;
  for (std::size_t ia = 0; ia < list_a.size(); ++ia) {
    ComplexPoint z = list_a[ia].point;
    double eps = list_a[ia].radius;

    struct Candidate {
      ComplexPoint point;
      double radius0;
      double radius;
    };
    std::vector<Candidate> candidates;
    for (const auto& b : list_b) candidates.push_back({b.point, b.radius, b.radius});

    bool keep = false;
    for (int round = 0;; ++round) {
      std::vector<Candidate> matches;
      for (auto& c : candidates)
        if (distance(z, c.point) <= eps + c.radius) matches.push_back(std::move(c));
      if (matches.empty()) break;
      if (round == max_rounds) {
        keep = true;
        if (matches.size() > 1) out.inconclusive = true;
        break;
      }
      try {
        z = newton_refine(system_a, z, 1).point;
        for (auto& c : matches) c.point = newton_refine(system_b, c.point, 1).point;
      } catch (const NewtonError&) {
        keep = true;
        out.inconclusive = true;
        break;
      }
      eps = contracted_radius(list_a[ia].radius, round + 1, z);
      for (auto& c : matches) c.radius = contracted_radius(c.radius0, round + 1, c.point);
      candidates = std::move(matches);
    }
    if (keep) {
      out.kept.push_back(ia);
      out.kept_points.push_back({z, eps});
    } else {
      out.discarded.push_back(ia);
    }
  }
  return out;
}

FloatMatrix vandermonde(std::span<const ComplexPoint> points, std::span<const Monomial> basis) {
  std::vector<Complex> entries;
  entries.reserve(points.size() * basis.size());
  for (const auto& p : points)
    for (const auto& m : basis) entries.push_back(eval_monomial(m, p));
  return FloatMatrix(points.size(), basis.size(), std::move(entries));
}

double smallest_singular_value(const FloatMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw std::invalid_argument("smallest_singular_value needs rows >= cols");
  if (n == 0) return std::numeric_limits<double>::infinity();
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = a(i, j);

  constexpr double tol = 1e-15;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(cols[p][i]);
          beta += std::norm(cols[q][i]);
          gamma += std::conj(cols[p][i]) * cols[q][i];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex up = cols[p][i];
          const Complex uq = cols[q][i] * phase;
          cols[p][i] = c * up - s * uq;
          cols[q][i] = s * up + c * uq;
        }
      }
    if (!rotated) break;
  }
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& col : cols) smallest = std::min(smallest, norm2(col));
  return smallest;
}

double vandermonde_perturbation_bound(std::size_t points, std::size_t variables, unsigned degree,
                                      double coordinate_bound, double accuracy) {
  if (degree == 0) return 0.0;
  return static_cast<double>(points) * static_cast<double>(variables) * degree *
         std::pow(coordinate_bound, static_cast<double>(degree) - 1.0) * accuracy;
}

MonomialBasis select_basis(const ApproxRootSet& roots, const Ring& ring) {
  const std::size_t k = roots.size();
  const std::size_t n = ring.size();
  if (k == 0) throw std::invalid_argument("select_basis needs at least one point");
  if (roots.arity() != n) throw std::invalid_argument("point arity does not match ring");
  const double m_bound = to_double(roots.bound());
  const double e = to_double(roots.accuracy());

  std::vector<Monomial> chosen{Monomial::one(n)};
  auto well_conditioned = [&](const std::vector<Monomial>& trial) {
    unsigned d = 0;
    for (const auto& m : trial) d = std::max(d, m.degree());
    const double sigma = smallest_singular_value(vandermonde(roots.points(), trial));
    return sigma > vandermonde_perturbation_bound(k, n, d, m_bound, e);
  };
  if (!well_conditioned(chosen)) throw NoWellConditionedBasisError("Vandermonde matrix of {1} is degenerate");

  std::set<Monomial> members(chosen.begin(), chosen.end());
  for (unsigned degree = 1; chosen.size() < k; ++degree) {
    bool any_candidate = false;
    for (const auto& m : monomials_of_degree(n, degree)) {
      if (chosen.size() == k) break;
      bool divisors_present = true;
      for (std::size_t v = 0; v < n && divisors_present; ++v)
        if (const auto q = m.divided_by_variable(v)) divisors_present = members.contains(*q);
      if (!divisors_present) continue;
      any_candidate = true;
      std::vector<Monomial> trial = chosen;
      trial.push_back(m);
      if (well_conditioned(trial)) {
        chosen = std::move(trial);
        members.insert(m);
      }
    }
    if (!any_candidate) break;
  }
  if (chosen.size() < k)
    throw NoWellConditionedBasisError("found only " + std::to_string(chosen.size()) + " of " + std::to_string(k) +
                                      " well-conditioned basis monomials");
  return MonomialBasis(std::move(chosen));
}

}  // namespace hermcert
