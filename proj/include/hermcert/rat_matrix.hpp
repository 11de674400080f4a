#pragma once

#include "hermcert/monomial.hpp"
#include "hermcert/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hermcert {

// Dense row-major matrix over Q. Square matrices may carry monomial labels
// indexing both rows and columns (Hermite matrices).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const;

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  const std::vector<Rational>& entries() const { return entries_; }

  const std::vector<Monomial>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<Monomial> labels);

  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;
  RatMatrix transpose() const;
  RatMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  RatMatrix principal_submatrix(std::span<const std::size_t> idx) const { return submatrix(idx, idx); }

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& scalar);

  // Compares entries only; labels are metadata.
  bool operator==(const RatMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<Monomial> labels_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, RatMatrix a);

}  // namespace hermcert
