#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "braidrev/braid.hpp"
#include "braidrev/error.hpp"
#include "braidrev/linalg.hpp"
#include "braidrev/matrix.hpp"
#include "braidrev/modular.hpp"
#include "braidrev/quiver.hpp"

namespace braidrev {

/// Representation (X1, X2) of B3 with the central element c = (X1X2)^3
/// acting trivially. Inverses are computed once at construction and reused by
/// word evaluation.
class B3Rep {
 public:
  B3Rep(CycMatrix X1, CycMatrix X2, std::optional<DimVector> dims = std::nullopt)
      : X1_(std::move(X1).without_blocks()), X2_(std::move(X2).without_blocks()), dims_(dims) {
    if (!X1_.is_square() || !X2_.is_square() || X1_.rows() != X2_.rows() || X1_.rows() == 0)
      throw ShapeError("B3 generators must be square of equal positive size");
    X1_inv_ = inverse(X1_);
    X2_inv_ = inverse(X2_);
    if (!(X1_ * X2_ * X1_ == X2_ * X1_ * X2_)) throw InconsistentRep("braid relation X1 X2 X1 = X2 X1 X2 fails");
    const CycMatrix t = X1_ * X2_;
    if (!power(t, 3).is_identity()) throw InconsistentRep("(X1 X2)^3 is not the identity");
    if (!power(t * X1_, 2).is_identity()) throw InconsistentRep("(X1 X2 X1)^2 is not the identity");
  }

  std::size_t n() const noexcept { return X1_.rows(); }
  const CycMatrix& X1() const noexcept { return X1_; }
  const CycMatrix& X2() const noexcept { return X2_; }
  const CycMatrix& X1_inverse() const noexcept { return X1_inv_; }
  const CycMatrix& X2_inverse() const noexcept { return X2_inv_; }
  const std::optional<DimVector>& dims() const noexcept { return dims_; }

  const CycMatrix& generator(Generator g, bool inverted) const {
    if (g == Generator::sigma1) return inverted ? X1_inv_ : X1_;
    return inverted ? X2_inv_ : X2_;
  }

  friend bool operator==(const B3Rep& l, const B3Rep& r) { return l.X1_ == r.X1_ && l.X2_ == r.X2_; }

 private:
  CycMatrix X1_, X2_, X1_inv_, X2_inv_;
  std::optional<DimVector> dims_;
};

/// diag(1_x, w^2 1_y, w 1_z)
inline CycMatrix eigen_d(const DimVector& d) {
  std::vector<CycRat> diag;
  diag.insert(diag.end(), d.x, CycRat(1));
  diag.insert(diag.end(), d.y, CycRat::rho_squared());
  diag.insert(diag.end(), d.z, CycRat::rho());
  return CycMatrix::diagonal(diag);
}

/// diag(1_a, -1_b)
inline CycMatrix eigen_j(const DimVector& d) {
  std::vector<CycRat> diag;
  diag.insert(diag.end(), d.a, CycRat(1));
  diag.insert(diag.end(), d.b, CycRat(-1));
  return CycMatrix::diagonal(diag);
}

/// X1 = B^-1 D B J and X2 = J B^-1 D B, with the sixth root of the central
/// character fixed to 1.
inline B3Rep build_rep(const QuiverRep& V) {
  const CycMatrix B = V.B().without_blocks();
  const CycMatrix Binv = inverse(B);
  const CycMatrix D = eigen_d(V.dims());
  const CycMatrix J = eigen_j(V.dims());
  const CycMatrix core = Binv * D * B;
  return {core * J, J * core, V.dims()};
}

inline B3Rep tau_rep(const B3Rep& phi) { return {transpose(phi.X1()), transpose(phi.X2()), phi.dims()}; }

// P^-1 X P on both generators.
inline B3Rep conjugate(const B3Rep& phi, const CycMatrix& P) {
  const CycMatrix Pinv = inverse(P);
  return {Pinv * phi.X1() * P, Pinv * phi.X2() * P, phi.dims()};
}

inline CycMatrix evaluate(const B3Rep& phi, const BraidWord& w) {
  CycMatrix result = CycMatrix::identity(phi.n());
  for (const auto& s : w.syllables()) {
    const bool inverted = s.exponent < 0;
    const auto e = static_cast<unsigned long>(inverted ? -s.exponent : s.exponent);
    result = result * power(phi.generator(s.generator, inverted), e);
  }
  return result;
}

inline CycRat trace_of(const B3Rep& phi, const BraidWord& w) { return trace(evaluate(phi, w)); }

namespace detail {

// Incremental semi-echelon basis: every stored row has a leading 1 at its
// pivot and zeros at the pivots of all rows stored before it.
class SpanBasis {
 public:
  bool insert(CycVector v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p].is_zero()) continue;
      const CycRat factor = v[p];
      const CycVector& row = rows_[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const CycRat inv = v[p].inv();
    for (auto& c : v) c *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::vector<CycVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Scale by the lcm of all denominators so the entries lie in Z[w]; the span
// of words in the generators is unchanged by nonzero scalars.
inline CycMatrix clear_denominators(const CycMatrix& m) {
  Integer l = 1;
  for (const auto& c : m.entries()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rh().get_den_mpz_t());
  }
  return m * CycRat(Rational(l));
}

}  // namespace detail

/// Dimension of the unital algebra generated by X1 and X2: the span of
/// {I, X1, X2} closed under left multiplication by the generators, round by
/// round, until a round adds nothing or the span is everything.
inline std::size_t burnside_dimension(const B3Rep& phi) {
  const std::size_t n = phi.n();
  const CycMatrix g1 = detail::clear_denominators(phi.X1());
  const CycMatrix g2 = detail::clear_denominators(phi.X2());
  detail::SpanBasis span;
  std::vector<CycMatrix> frontier{CycMatrix::identity(n)};
  span.insert(frontier.front().entries());
  for (std::size_t round = 0; round < n * n && !frontier.empty() && span.size() < n * n; ++round) {
    std::vector<CycMatrix> next;
    for (const auto& m : frontier) {
      for (const CycMatrix* g : {&g1, &g2}) {
        CycMatrix product = *g * m;
        if (span.insert(product.entries())) next.push_back(std::move(product));
        if (span.size() == n * n) return span.size();
      }
    }
    frontier = std::move(next);
  }
  return span.size();
}

/// Burnside: simple iff X1, X2 generate the full matrix algebra.
///
/// The closure is first run over F_p. Reduction mod p cannot raise the rank of
/// a set of words, so a full span there certifies a full span over Q(w); any
/// other outcome is settled by the exact closure.
inline bool is_simple(const B3Rep& phi) {
  const std::size_t full = phi.n() * phi.n();
  if (modular::burnside_dimension(phi.X1(), phi.X2()) == full) return true;
  return burnside_dimension(phi) == full;
}

/// Multiplicities of the eigenvalues of S = X1X2X1 (+1, -1) and T = X1X2
/// (1, w, w^2).
inline DimVector recover_dimvector(const B3Rep& phi) {
  const std::size_t n = phi.n();
  const CycMatrix T = phi.X1() * phi.X2();
  const CycMatrix S = T * phi.X1();
  auto eigenspace = [&](const CycMatrix& m, const CycRat& lambda) {
    return n - rank(m - CycMatrix::scalar(n, lambda));
  };
  DimVector d{eigenspace(S, 1), eigenspace(S, -1), eigenspace(T, 1), eigenspace(T, CycRat::rho()),
              eigenspace(T, CycRat::rho_squared())};
  if (d.a + d.b != n || d.x + d.y + d.z != n)
    throw InconsistentRep("eigenspaces " + to_string(d) + " do not fill dimension " + std::to_string(n));
  return d;
}

}  // namespace braidrev
