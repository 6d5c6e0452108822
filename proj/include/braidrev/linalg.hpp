#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "braidrev/cyc.hpp"
#include "braidrev/error.hpp"
#include "braidrev/matrix.hpp"
#include "braidrev/poly.hpp"

namespace braidrev {

using CycVector = std::vector<CycRat>;

namespace detail {

// Row i -= factor * row p, restricted to columns [from, cols).
inline void eliminate(CycMatrix& m, std::size_t i, std::size_t p, const CycRat& factor, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    if (m(p, j).is_zero()) continue;
    m(i, j) -= factor * m(p, j);
  }
}

inline void swap_rows(CycMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Reduced row echelon form in place, considering only the first `pivot_cols`
/// columns as pivot candidates. The pivot is the first nonzero entry scanning
/// down the column. Returns the pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(CycMatrix& m, std::optional<std::size_t> pivot_cols = std::nullopt) {
  const std::size_t limit = pivot_cols.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    detail::swap_rows(m, r, p);
    if (!m(r, c).is_one()) {
      CycRat inv = m(r, c).inv();
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      CycRat factor = m(i, c);
      detail::eliminate(m, i, r, factor, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(CycMatrix m) { return row_reduce(m).size(); }

/// Basis of the right kernel. Each vector has a 1 in one free column, zeros in
/// the other free columns, and pivot entries read off the reduced form.
inline std::vector<CycVector> nullspace(CycMatrix m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    CycVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline CycRat determinant(CycMatrix m) {
  if (!m.is_square()) throw ShapeError("determinant of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  CycRat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return {};
    if (p != c) {
      detail::swap_rows(m, c, p);
      det = -det;
    }
    det *= m(c, c);
    CycRat inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      CycRat factor = m(i, c) * inv;
      detail::eliminate(m, i, c, factor, c);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws SingularMatrix carrying the rank found.
/// Block annotations are transposed onto the result (the inverse maps back).
inline CycMatrix inverse(const CycMatrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  CycMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) throw SingularMatrix(n, pivots.size());
  CycMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  if (m.has_blocks()) inv.set_blocks(m.col_blocks(), m.row_blocks());
  return inv;
}

inline bool is_invertible(const CycMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Assemble a grid of blocks; every block in a grid row shares its height and
/// every block in a grid column shares its width. The result is annotated with
/// the grid partition.
inline CycMatrix block_compose(const std::vector<std::vector<CycMatrix>>& grid) {
  if (grid.empty() || grid.front().empty()) throw ShapeError("empty block grid");
  const std::size_t grid_cols = grid.front().size();
  Blocks heights, widths;
  for (const auto& row : grid) {
    if (row.size() != grid_cols) throw ShapeError("ragged block grid");
    heights.push_back(row.front().rows());
  }
  for (const auto& block : grid.front()) widths.push_back(block.cols());
  for (std::size_t bi = 0; bi < grid.size(); ++bi)
    for (std::size_t bj = 0; bj < grid_cols; ++bj)
      if (grid[bi][bj].rows() != heights[bi] || grid[bi][bj].cols() != widths[bj])
        throw ShapeError("block (" + std::to_string(bi) + "," + std::to_string(bj) + ") has shape " +
                         grid[bi][bj].shape());

  const std::size_t rows = std::accumulate(heights.begin(), heights.end(), std::size_t{0});
  const std::size_t cols = std::accumulate(widths.begin(), widths.end(), std::size_t{0});
  CycMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < grid_cols; ++bj) {
      const CycMatrix& b = grid[bi][bj];
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  out.set_blocks(std::move(heights), std::move(widths));
  return out;
}

inline CycMatrix submatrix(const CycMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > m.rows() || c0 + cols > m.cols()) throw ShapeError("submatrix out of range");
  CycMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

inline CycMatrix block_extract(const CycMatrix& m, std::size_t row_block, std::size_t col_block) {
  if (!m.has_blocks()) throw ShapeError("matrix has no block annotation");
  const auto& rb = m.row_blocks();
  const auto& cb = m.col_blocks();
  if (row_block >= rb.size() || col_block >= cb.size()) throw ShapeError("block index out of range");
  std::size_t r0 = std::accumulate(rb.begin(), rb.begin() + static_cast<std::ptrdiff_t>(row_block), std::size_t{0});
  std::size_t c0 = std::accumulate(cb.begin(), cb.begin() + static_cast<std::ptrdiff_t>(col_block), std::size_t{0});
  return submatrix(m, r0, c0, rb[row_block], cb[col_block]);
}

/// Block diagonal matrix annotated with the square partition of its blocks.
inline CycMatrix block_diagonal(const std::vector<CycMatrix>& blocks) {
  Blocks sizes;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw ShapeError("block_diagonal needs square blocks");
    sizes.push_back(b.rows());
  }
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  CycMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  out.set_blocks(sizes, sizes);
  return out;
}

// Zero outside the diagonal blocks of the given square partition.
inline bool respects_partition(const CycMatrix& m, const Blocks& partition) {
  if (!m.is_square() || std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != m.rows()) return false;
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < partition.size(); ++b) owner.insert(owner.end(), partition[b], b);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return false;
  return true;
}

namespace detail {

inline TrivariatePoly poly_det(const std::vector<std::vector<TrivariatePoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return TrivariatePoly::constant(1);
  if (n == 1) return m[0][0];
  TrivariatePoly det(static_cast<unsigned>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<TrivariatePoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<TrivariatePoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    TrivariatePoly term = m[0][j] * poly_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace detail

/// det(P x + Q y + R z) as a homogeneous polynomial of degree m, by cofactor
/// expansion along the first row.
inline TrivariatePoly pencil_det(const CycMatrix& p, const CycMatrix& q, const CycMatrix& r) {
  if (!p.is_square() || !q.is_square() || !r.is_square() || p.rows() != q.rows() || p.rows() != r.rows())
    throw ShapeError("pencil needs three square matrices of equal size");
  const std::size_t m = p.rows();
  std::vector<std::vector<TrivariatePoly>> entries(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) entries[i].push_back(TrivariatePoly::linear(p(i, j), q(i, j), r(i, j)));
  return detail::poly_det(entries);
}

}  // namespace braidrev
