#include "hermcert/hermite.hpp"

#include "hermcert/linalg.hpp"

#include <algorithm>
#include <map>

namespace hermcert {

HermitePlus make_hermite_plus(MonomialBasis basis, RatMatrix matrix) {
  const std::vector<Monomial> ext = extended_monomials(basis);
  if (!matrix.is_square() || matrix.rows() != ext.size())
    throw std::invalid_argument("extended Hermite matrix must be " + std::to_string(ext.size()) + "x" +
                                std::to_string(ext.size()));
  if (!matrix.has_labels()) matrix.set_labels(ext);
  if (matrix.labels() != ext) throw std::invalid_argument("matrix labels are not the extension of the basis");
  if (!matrix.is_symmetric()) throw NotSymmetricError();
  return HermitePlus{std::move(basis), std::move(matrix), std::nullopt, std::nullopt};
}

FloatMatrix approx_extended_hermite(const ApproxRootSet& points, std::span<const Monomial> labels,
                                    const MultiPoly& g) {
  for (const auto& m : labels)
    if (m.arity() != points.arity() && !points.points().empty())
      throw std::invalid_argument("label arity does not match points");
  std::vector<Complex> weights;
  for (const auto& z : points.points()) weights.push_back(eval_complex(g, z));

  std::map<Monomial, Complex> sums;
  const std::size_t l = labels.size();
  std::vector<Complex> entries(l * l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const Monomial alpha = labels[i] * labels[j];
      auto it = sums.find(alpha);
      if (it == sums.end()) {
        Complex s(0.0, 0.0);
        for (std::size_t t = 0; t < points.size(); ++t) s += weights[t] * eval_monomial(alpha, points.points()[t]);
        it = sums.emplace(alpha, s).first;
      }
      entries[i * l + j] = it->second;
    }
  return FloatMatrix(l, l, std::move(entries));
}

FloatMatrix approx_extended_hermite(const ApproxRootSet& points, std::span<const Monomial> labels) {
  const std::size_t n = points.arity();
  return approx_extended_hermite(points, labels, MultiPoly::constant(Ring::generic(n), 1));
}

ReconstructionError::ReconstructionError(std::size_t row, std::size_t col, Monomial product, Reason reason)
    : std::runtime_error("reconstruction failed at entry (" + std::to_string(row) + ", " + std::to_string(col) +
                         "): " + to_string(reason)),
      row_(row),
      col_(col),
      product_(std::move(product)),
      reason_(reason) {}

std::string to_string(ReconstructionError::Reason reason) {
  switch (reason) {
    case ReconstructionError::Reason::NotFound: return "NotFound";
    case ReconstructionError::Reason::NotUsable: return "NotUsable";
    case ReconstructionError::Reason::ImaginaryTooLarge: return "ImaginaryTooLarge";
  }
  return "unknown";
}

HermitePlus reconstruct_hermite(const FloatMatrix& approx, const MonomialBasis& basis, const Rational& accuracy,
                                std::size_t points, std::size_t variables, const Rational& bound) {
  if (accuracy <= 0 || bound <= 0) throw std::invalid_argument("E and M must be positive");
  const std::vector<Monomial> ext = extended_monomials(basis);
  const std::size_t l = ext.size();
  if (approx.rows() != l || approx.cols() != l) throw std::invalid_argument("approximate matrix size mismatch");

  ReconstructionProvenance prov{accuracy, bound, points, variables, {}};
  std::map<Monomial, Rational> exact;
  RatMatrix m(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Monomial alpha = ext[i] * ext[j];
      auto it = exact.find(alpha);
      if (it == exact.end()) {
        const unsigned d = std::max(alpha.degree(), 1u);
        const Rational err = power_sum_error_bound(accuracy, points, variables, d, bound);
        if (abs(from_double(approx(i, j).imag())) > err)
          throw ReconstructionError(i, j, alpha, ReconstructionError::Reason::ImaginaryTooLarge);
        const auto den = denominator_bound(accuracy, points, variables, d, bound);
        if (!den) throw ReconstructionError(i, j, alpha, ReconstructionError::Reason::NotUsable);
        const auto value = rational_reconstruct(from_double(approx(i, j).real()), *den);
        if (!value) throw ReconstructionError(i, j, alpha, ReconstructionError::Reason::NotFound);
        prov.denominator_bounds.emplace_back(alpha, *den);
        it = exact.emplace(std::move(alpha), *value).first;
      }
      m(i, j) = it->second;
    }
  m.set_labels(ext);
  HermitePlus out{basis, std::move(m), std::move(prov), std::nullopt};
  return out;
}

HermitePlus build_hermite(const ApproxRootSet& points, const MonomialBasis& basis) {
  if (points.arity() != basis.arity()) throw std::invalid_argument("basis arity does not match points");
  const std::vector<Monomial> ext = extended_monomials(basis);
  return reconstruct_hermite(approx_extended_hermite(points, ext), basis, points.accuracy(), points.size(),
                             points.arity(), points.bound());
}

NonRadicalHermite build_nonradical(const ApproxRootSet& points, const MonomialBasis& basis) {
  if (basis.size() != points.size())
    throw std::invalid_argument("basis size must equal the number of points counted with multiplicity");
  HermitePlus full = build_hermite(points, basis);

  std::vector<std::size_t> base_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) base_idx[i] = i;  // basis is a prefix of its extension
  RatMatrix h1 = full.matrix.principal_submatrix(base_idx);
  h1.set_labels(basis.monomials());
  const ConnectedSelection sel = max_nonsingular_connected_submatrix(h1);
  const std::size_t kbar = sel.monomials.size();

  const std::size_t full_rank = rank(full.matrix);
  if (full_rank > kbar)
    throw NonRadicalRankError("extended matrix has rank " + std::to_string(full_rank) + " above the " +
                              std::to_string(kbar) + " distinct roots found");

  MonomialBasis reduced_basis(sel.monomials);
  const std::vector<Monomial> reduced_ext = extended_monomials(reduced_basis);
  const auto& labels = full.matrix.labels();
  std::vector<std::size_t> idx;
  for (const auto& m : reduced_ext) {
    const auto it = std::find(labels.begin(), labels.end(), m);
    idx.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  RatMatrix reduced_matrix = full.matrix.principal_submatrix(idx);
  reduced_matrix.set_labels(reduced_ext);

  NonRadicalHermite out;
  out.reduced_size = kbar;
  out.reduced_basis = reduced_basis;
  out.reduced = HermitePlus{reduced_basis, std::move(reduced_matrix), full.provenance, points.size()};
  out.full = std::move(full);
  return out;
}

}  // namespace hermcert
