#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidrev/cyc.hpp"
#include "braidrev/error.hpp"

namespace braidrev {

using Blocks = std::vector<std::size_t>;

/// Dense row-major matrix over Q(w), optionally annotated with a row and a
/// column block partition. Zero-sized blocks are allowed because dimension
/// vectors such as (1,1;1,0,1) have empty eigenspaces.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CycMatrix(std::size_t rows, std::size_t cols, std::vector<CycRat> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match shape");
  }
  CycMatrix(std::initializer_list<std::initializer_list<CycRat>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static CycMatrix scalar(std::size_t n, const CycRat& c) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  static CycMatrix diagonal(std::span<const CycRat> d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  CycRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<CycRat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const CycRat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<CycRat>& entries() const noexcept { return data_; }

  const Blocks& row_blocks() const noexcept { return row_blocks_; }
  const Blocks& col_blocks() const noexcept { return col_blocks_; }
  bool has_blocks() const noexcept { return !row_blocks_.empty() && !col_blocks_.empty(); }

  CycMatrix& set_blocks(Blocks row_blocks, Blocks col_blocks) {
    auto sum = [](const Blocks& b) { return std::accumulate(b.begin(), b.end(), std::size_t{0}); };
    if (!row_blocks.empty() && sum(row_blocks) != rows_)
      throw ShapeError("row blocks sum to " + std::to_string(sum(row_blocks)) + ", expected " + std::to_string(rows_));
    if (!col_blocks.empty() && sum(col_blocks) != cols_)
      throw ShapeError("column blocks sum to " + std::to_string(sum(col_blocks)) + ", expected " +
                       std::to_string(cols_));
    row_blocks_ = std::move(row_blocks);
    col_blocks_ = std::move(col_blocks);
    return *this;
  }

  CycMatrix without_blocks() const {
    CycMatrix m = *this;
    m.row_blocks_.clear();
    m.col_blocks_.clear();
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycRat& c) { return c.is_zero(); });
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  CycMatrix& operator+=(const CycMatrix& o) {
    require_same_shape(o, "addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  CycMatrix& operator-=(const CycMatrix& o) {
    require_same_shape(o, "subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CycMatrix& operator*=(const CycRat& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const CycRat& c) { return a *= c; }
  friend CycMatrix operator*(const CycRat& c, CycMatrix a) { return a *= c; }
  CycMatrix operator-() const { return *this * CycRat(-1); }

  friend CycMatrix operator*(const CycMatrix& l, const CycMatrix& r) {
    if (l.cols_ != r.rows_)
      throw ShapeError("product of " + l.shape() + " and " + r.shape() + " matrices");
    CycMatrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i) {
      for (std::size_t k = 0; k < l.cols_; ++k) {
        const CycRat& lik = l(i, k);
        if (lik.is_zero()) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) {
          if (r(k, j).is_zero()) continue;
          out(i, j) += lik * r(k, j);
        }
      }
    }
    if (!l.row_blocks_.empty() && !r.col_blocks_.empty()) out.set_blocks(l.row_blocks_, r.col_blocks_);
    return out;
  }

  // Entrywise equality; block annotations are metadata and do not take part.
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const CycMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError(std::string("shape mismatch in ") + what);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycRat> data_;
  Blocks row_blocks_;
  Blocks col_blocks_;
};

inline CycMatrix transpose(const CycMatrix& m) {
  CycMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  if (!m.row_blocks().empty() || !m.col_blocks().empty()) t.set_blocks(m.col_blocks(), m.row_blocks());
  return t;
}

inline CycRat trace(const CycMatrix& m) {
  if (!m.is_square()) throw ShapeError("trace of non-square " + m.shape() + " matrix");
  CycRat sum;
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

// Binary powering for nonnegative exponents.
inline CycMatrix power(const CycMatrix& m, unsigned long e) {
  if (!m.is_square()) throw ShapeError("power of non-square matrix");
  CycMatrix result = CycMatrix::identity(m.rows());
  CycMatrix base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

inline std::ostream& operator<<(std::ostream& os, const CycMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace braidrev
