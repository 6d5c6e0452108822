#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "braidrev/error.hpp"
#include "braidrev/linalg.hpp"
#include "braidrev/matrix.hpp"
#include "braidrev/random.hpp"

namespace braidrev {

/// Dimension vector (a,b;x,y,z): multiplicities of the eigenvalues +1, -1 of
/// the order-two generator and 1, w, w^2 of the order-three generator.
struct DimVector {
  std::size_t a = 0, b = 0, x = 0, y = 0, z = 0;

  std::size_t n() const noexcept { return a + b; }
  bool balanced() const noexcept { return a + b == x + y + z; }
  Blocks row_blocks() const { return {x, y, z}; }
  Blocks col_blocks() const { return {a, b}; }

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector& l, const DimVector& r) {
    return std::array{l.a, l.b, l.x, l.y, l.z} <=> std::array{r.a, r.b, r.x, r.y, r.z};
  }
};

inline std::string to_string(const DimVector& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ";" + std::to_string(d.x) + "," +
         std::to_string(d.y) + "," + std::to_string(d.z) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const DimVector& d) { return os << to_string(d); }

/// Dimension vector of a simple representation of C2 * C3: either all three
/// eigenspaces of the order-three generator are nonzero and
/// max(x,y,z) <= min(a,b), or it is one of the 1- and 2-dimensional exceptions.
inline bool is_simple_dimvector(const DimVector& d) {
  if (!d.balanced() || d.n() == 0) return false;
  if (d.x * d.y * d.z != 0) return std::max({d.x, d.y, d.z}) <= std::min(d.a, d.b);
  if (d.n() == 1) return true;
  if (d.n() == 2 && d.a == 1 && d.b == 1) return std::max({d.x, d.y, d.z}) == 1;
  return false;
}

/// V_B: the base change B between the (a,b) and (x,y,z) eigenspace bases.
/// Rows of B are blocked (x,y,z) top to bottom, columns (a,b) left to right.
class QuiverRep {
 public:
  QuiverRep(DimVector dims, CycMatrix B) : dims_(dims), B_(std::move(B)) {
    if (!dims_.balanced()) throw ShapeError("dimension vector " + to_string(dims_) + " has a+b != x+y+z");
    if (B_.rows() != dims_.n() || B_.cols() != dims_.n())
      throw ShapeError("B is " + B_.shape() + " but dimension vector " + to_string(dims_) + " needs n = " +
                       std::to_string(dims_.n()));
    B_.set_blocks(dims_.row_blocks(), dims_.col_blocks());
  }

  const DimVector& dims() const noexcept { return dims_; }
  const CycMatrix& B() const noexcept { return B_; }
  std::size_t n() const noexcept { return dims_.n(); }

  CycMatrix block(std::size_t row_block, std::size_t col_block) const { return block_extract(B_, row_block, col_block); }

  friend bool operator==(const QuiverRep& l, const QuiverRep& r) { return l.dims_ == r.dims_ && l.B_ == r.B_; }

 private:
  DimVector dims_;
  CycMatrix B_;
};

/// Element (M1,M2;N1,N2,N3) of GL_a x GL_b x GL_x x GL_y x GL_z. Also used
/// for not necessarily invertible hom-space members.
struct GLAlphaElement {
  CycMatrix M1, M2, N1, N2, N3;

  static GLAlphaElement identity(const DimVector& d) {
    return {CycMatrix::identity(d.a), CycMatrix::identity(d.b), CycMatrix::identity(d.x), CycMatrix::identity(d.y),
            CycMatrix::identity(d.z)};
  }

  DimVector dims() const { return {M1.rows(), M2.rows(), N1.rows(), N2.rows(), N3.rows()}; }

  bool is_invertible() const {
    return braidrev::is_invertible(M1) && braidrev::is_invertible(M2) && braidrev::is_invertible(N1) &&
           braidrev::is_invertible(N2) && braidrev::is_invertible(N3);
  }

  CycMatrix source_matrix() const { return block_diagonal({M1, M2}); }
  CycMatrix target_matrix() const { return block_diagonal({N1, N2, N3}); }

  GLAlphaElement inverse() const {
    return {braidrev::inverse(M1), braidrev::inverse(M2), braidrev::inverse(N1), braidrev::inverse(N2),
            braidrev::inverse(N3)};
  }

  friend GLAlphaElement operator*(const GLAlphaElement& g, const GLAlphaElement& h) {
    return {g.M1 * h.M1, g.M2 * h.M2, g.N1 * h.N1, g.N2 * h.N2, g.N3 * h.N3};
  }
  friend GLAlphaElement operator+(const GLAlphaElement& g, const GLAlphaElement& h) {
    return {g.M1 + h.M1, g.M2 + h.M2, g.N1 + h.N1, g.N2 + h.N2, g.N3 + h.N3};
  }
  friend GLAlphaElement operator*(const CycRat& c, const GLAlphaElement& g) {
    return {c * g.M1, c * g.M2, c * g.N1, c * g.N2, c * g.N3};
  }
  friend bool operator==(const GLAlphaElement&, const GLAlphaElement&) = default;
};

/// B -> diag(N1,N2,N3) B diag(M1,M2)^-1.
inline QuiverRep act(const GLAlphaElement& g, const QuiverRep& V) {
  if (g.dims() != V.dims()) throw ShapeError("group element " + to_string(g.dims()) + " acting on " + to_string(V.dims()));
  CycMatrix B = g.target_matrix() * V.B() * inverse(g.source_matrix());
  return {V.dims(), std::move(B)};
}

/// The transpose involution on quiver data: B -> (B^-1)^tr.
inline QuiverRep tau_quiver(const QuiverRep& V) { return {V.dims(), transpose(inverse(V.B()))}; }

/// Basis of {(M1,M2;N1,N2,N3) : diag(N) V.B = W.B diag(M)}, the linear maps
/// V -> W of quiver representations.
inline std::vector<GLAlphaElement> hom_space(const QuiverRep& V, const QuiverRep& W) {
  if (V.dims() != W.dims())
    throw ShapeError("hom space between " + to_string(V.dims()) + " and " + to_string(W.dims()));
  const DimVector& d = V.dims();
  const std::size_t n = d.n();
  const std::array<std::size_t, 5> sizes{d.a, d.b, d.x, d.y, d.z};
  std::array<std::size_t, 5> var_offset{};
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    var_offset[i] = unknowns;
    unknowns += sizes[i] * sizes[i];
  }
  // Block index and in-block offset of each row (x,y,z) and column (a,b).
  std::vector<std::size_t> row_block(n), row_pos(n), col_block(n), col_pos(n);
  for (std::size_t r = 0, blk = 0; blk < 3; ++blk)
    for (std::size_t i = 0; i < sizes[2 + blk]; ++i, ++r) row_block[r] = 2 + blk, row_pos[r] = i;
  for (std::size_t c = 0, blk = 0; blk < 2; ++blk)
    for (std::size_t i = 0; i < sizes[blk]; ++i, ++c) col_block[c] = blk, col_pos[c] = i;
  auto var = [&](std::size_t block, std::size_t i, std::size_t j) {
    return var_offset[block] + i * sizes[block] + j;
  };

  CycMatrix system(n * n, unknowns);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t eq = r * n + c;
      // (diag(N) V.B)[r][c] = sum over r' in the block of r of N[r][r'] V.B[r'][c]
      const std::size_t nb = row_block[r];
      const std::size_t r_start = r - row_pos[r];
      for (std::size_t k = 0; k < sizes[nb]; ++k)
        system(eq, var(nb, row_pos[r], k)) += V.B()(r_start + k, c);
      // (W.B diag(M))[r][c] = sum over c' in the block of c of W.B[r][c'] M[c'][c]
      const std::size_t mb = col_block[c];
      const std::size_t c_start = c - col_pos[c];
      for (std::size_t k = 0; k < sizes[mb]; ++k)
        system(eq, var(mb, k, col_pos[c])) -= W.B()(r, c_start + k);
    }
  }

  std::vector<GLAlphaElement> basis;
  for (const auto& v : nullspace(std::move(system))) {
    std::array<CycMatrix, 5> blocks;
    for (std::size_t blk = 0; blk < 5; ++blk) {
      blocks[blk] = CycMatrix(sizes[blk], sizes[blk]);
      for (std::size_t i = 0; i < sizes[blk]; ++i)
        for (std::size_t j = 0; j < sizes[blk]; ++j) blocks[blk](i, j) = v[var(blk, i, j)];
    }
    basis.push_back({blocks[0], blocks[1], blocks[2], blocks[3], blocks[4]});
  }
  return basis;
}

enum class IsoStatus { isomorphic, not_isomorphic, inconclusive_nonstable };

inline std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::isomorphic: return "isomorphic";
    case IsoStatus::not_isomorphic: return "not-isomorphic";
    case IsoStatus::inconclusive_nonstable: return "inconclusive-nonstable";
  }
  return "?";
}

struct IsoResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  std::optional<GLAlphaElement> witness;  // act(*witness, V) == W when set
  std::size_t hom_dimension = 0;

  explicit operator bool() const noexcept { return witness.has_value(); }
};

inline constexpr int kRandomCombinationAttempts = 8;

/// GL(alpha)-orbit test. When Hom(V,W) has dimension at most one the answer is
/// exact for any input; for stable V and W that is always the case. Larger hom
/// spaces get the basis plus a few seeded random combinations, and a miss is
/// reported as inconclusive instead of "not isomorphic".
inline IsoResult are_isomorphic(const QuiverRep& V, const QuiverRep& W, Rng& rng) {
  auto basis = hom_space(V, W);
  IsoResult result;
  result.hom_dimension = basis.size();
  if (basis.empty()) return result;

  auto accept = [&](const GLAlphaElement& g) {
    if (!g.is_invertible()) return false;
    if (!(act(g, V).B() == W.B())) throw std::logic_error("hom-space element failed the orbit identity");
    result.status = IsoStatus::isomorphic;
    result.witness = g;
    return true;
  };

  for (const auto& g : basis)
    if (accept(g)) return result;
  if (basis.size() == 1) return result;

  for (int attempt = 0; attempt < kRandomCombinationAttempts; ++attempt) {
    GLAlphaElement g = CycRat(random_int(rng, -kSampleBound, kSampleBound)) * basis.front();
    for (std::size_t i = 1; i < basis.size(); ++i)
      g = g + CycRat(random_int(rng, -kSampleBound, kSampleBound)) * basis[i];
    if (accept(g)) return result;
  }
  result.status = IsoStatus::inconclusive_nonstable;
  return result;
}

inline IsoResult are_isomorphic(const QuiverRep& V, const QuiverRep& W) {
  Rng rng(0);
  return are_isomorphic(V, W, rng);
}

}  // namespace braidrev
