#pragma once

// Dense matrices over one tower level. Entries are stored as flat digit
// blocks so that row operations over a prime field go straight to the
// vector kernels.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addpoly/ffield.hpp"

namespace addpoly {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Element& x);
  std::span<Digit> entry(std::size_t i, std::size_t j);
  std::span<const Digit> entry(std::size_t i, std::size_t j) const;
  std::span<Digit> row(std::size_t i);
  std::span<const Digit> row(std::size_t i) const;

  bool is_zero_entry(std::size_t i, std::size_t j) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.digits_ == b.digits_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;  // field degree
  std::vector<Digit> digits_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Element& c);
/// A applied to a column vector.
std::vector<Element> mul_vec(const Matrix& a, const std::vector<Element>& v);

/// row_dst += c * row_src (rows of the same width).
void row_axpy(const Field& F, std::span<Digit> dst, std::span<const Digit> src, const Element& c);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {v : m v = 0}, one vector per row, in reduced echelon form.
Matrix nullspace(const Matrix& m);

// Feeds vectors one at a time and reports the first linear dependence,
// expressed as coefficients c_0..c_i with c_i = 1 and sum c_j v_j = 0.
class IncrementalEliminator {
 public:
  IncrementalEliminator(Field field, std::size_t length);

  /// Returns the dependence if v lies in the span of the previous vectors.
  std::optional<std::vector<Element>> add(const std::vector<Element>& v);
  std::size_t count() const noexcept { return count_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  Field field_;
  std::size_t length_;
  std::size_t count_ = 0;
  // Reduced rows of [vector | combination], combination padded to `length_ + 1`.
  std::vector<std::vector<Digit>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace addpoly
