#include "addpoly/linalg.hpp"

#include <algorithm>

#include "addpoly/error.hpp"

namespace addpoly {

namespace {

bool zero_block(std::span<const Digit> x) {
  return std::all_of(x.begin(), x.end(), [](Digit d) { return d == 0; });
}

void scale_row(const Field& F, std::span<Digit> row, const Element& c) {
  const std::size_t w = F.degree();
  if (w == 1) {
    const std::uint64_t k = c.coords[0];
    for (auto& d : row) d = static_cast<Digit>(d * k % F.characteristic());
    return;
  }
  Element tmp = F.zero();
  for (std::size_t off = 0; off < row.size(); off += w) {
    auto blk = row.subspan(off, w);
    if (zero_block(blk)) continue;
    F.mul_into(blk, Field::span(c), Field::span(tmp));
    std::copy(tmp.coords.begin(), tmp.coords.end(), blk.begin());
  }
}

Element block_element(const Field& F, std::span<const Digit> blk) {
  Element x = F.zero();
  std::copy(blk.begin(), blk.end(), x.coords.begin());
  return x;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), width_(field_.degree()), digits_(rows * cols * width_, 0) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

Element Matrix::at(std::size_t i, std::size_t j) const { return block_element(field_, entry(i, j)); }

void Matrix::set(std::size_t i, std::size_t j, const Element& x) {
  const Element y = field_.embed(x);
  std::copy(y.coords.begin(), y.coords.end(), entry(i, j).begin());
}

std::span<Digit> Matrix::entry(std::size_t i, std::size_t j) {
  return {digits_.data() + (i * cols_ + j) * width_, width_};
}

std::span<const Digit> Matrix::entry(std::size_t i, std::size_t j) const {
  return {digits_.data() + (i * cols_ + j) * width_, width_};
}

std::span<Digit> Matrix::row(std::size_t i) { return {digits_.data() + i * cols_ * width_, cols_ * width_}; }

std::span<const Digit> Matrix::row(std::size_t i) const {
  return {digits_.data() + i * cols_ * width_, cols_ * width_};
}

bool Matrix::is_zero_entry(std::size_t i, std::size_t j) const { return zero_block(entry(i, j)); }

void row_axpy(const Field& F, std::span<Digit> dst, std::span<const Digit> src, const Element& c) {
  if (F.is_zero(c)) return;
  const std::size_t w = F.degree();
  if (w == 1) {
    kernels::active().axpy_mod(dst, src, c.coords[0], F.characteristic());
    return;
  }
  Element tmp = F.zero();
  for (std::size_t off = 0; off < dst.size(); off += w) {
    auto s = src.subspan(off, w);
    if (zero_block(s)) continue;
    F.mul_into(s, Field::span(c), Field::span(tmp));
    F.add_to(dst.subspan(off, w), Field::span(tmp));
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  const Field& F = a.field();
  Matrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a.is_zero_entry(i, l)) continue;
      row_axpy(F, c.row(i), b.row(l), a.at(i, l));
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.field().add_to(c.entry(i, j), b.entry(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.field().sub_from(c.entry(i, j), b.entry(i, j));
  return c;
}

Matrix scale(const Matrix& a, const Element& c) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) scale_row(a.field(), m.row(i), c);
  return m;
}

std::vector<Element> mul_vec(const Matrix& a, const std::vector<Element>& v) {
  const Field& F = a.field();
  std::vector<Element> out(a.rows(), F.zero());
  Element tmp = F.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_zero_entry(i, j) || F.is_zero(v[j])) continue;
      F.mul_into(a.entry(i, j), Field::span(v[j]), Field::span(tmp));
      F.add_to(out[i], tmp);
    }
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  const Field& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.is_zero_entry(sel, c)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      auto a = m.row(sel), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    scale_row(F, m.row(r), F.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.is_zero_entry(i, c)) continue;
      row_axpy(F, m.row(i), m.row(r), F.neg(m.at(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m) {
  const Field& F = m.field();
  Matrix e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(F, free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.set(b, fc, F.one());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.set(b, pivots[i], F.neg(e.at(i, fc)));
  }
  rref(basis);
  return basis;
}

// ---------------------------------------------------------------------------

IncrementalEliminator::IncrementalEliminator(Field field, std::size_t length)
    : field_(std::move(field)), length_(length) {}

std::optional<std::vector<Element>> IncrementalEliminator::add(const std::vector<Element>& v) {
  const Field& F = field_;
  const std::size_t w = F.degree();
  if (v.size() != length_) throw InputError("eliminator: vector length mismatch");
  if (count_ > length_) throw InternalInconsistency("eliminator: more than length + 1 vectors");
  const std::size_t comb_len = length_ + 1;
  std::vector<Digit> row((length_ + comb_len) * w, 0);
  for (std::size_t j = 0; j < length_; ++j) {
    const Element x = F.embed(v[j]);
    std::copy(x.coords.begin(), x.coords.end(), row.begin() + static_cast<long>(j * w));
  }
  row[(length_ + count_) * w] = 1;
  const std::size_t index = count_++;

  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const std::size_t pc = pivots_[b];
    std::span<const Digit> blk(row.data() + pc * w, w);
    if (zero_block(blk)) continue;
    row_axpy(F, row, rows_[b], F.neg(block_element(F, blk)));
  }
  std::size_t pivot = length_;
  for (std::size_t j = 0; j < length_; ++j) {
    if (!zero_block({row.data() + j * w, w})) {
      pivot = j;
      break;
    }
  }
  if (pivot == length_) {
    std::vector<Element> comb;
    comb.reserve(index + 1);
    for (std::size_t j = 0; j <= index; ++j) {
      comb.push_back(block_element(F, {row.data() + (length_ + j) * w, w}));
    }
    return comb;
  }
  scale_row(F, row, F.inv(block_element(F, {row.data() + pivot * w, w})));
  // Rows are reduced in insertion order, so earlier pivots stay clear of
  // later rows and no back substitution is needed.
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return std::nullopt;
}

}  // namespace addpoly
