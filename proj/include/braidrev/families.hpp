#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidrev/b3rep.hpp"
#include "braidrev/braid.hpp"
#include "braidrev/error.hpp"
#include "braidrev/linalg.hpp"
#include "braidrev/poly.hpp"
#include "braidrev/quiver.hpp"
#include "braidrev/random.hpp"

namespace braidrev {

enum class FamilyKind { even_k, odd_k, dim6_detecting, dim42_exceptional, two_dim_example };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::even_k: return "even_k";
    case FamilyKind::odd_k: return "odd_k";
    case FamilyKind::dim6_detecting: return "dim6_detecting";
    case FamilyKind::dim42_exceptional: return "dim42_exceptional";
    case FamilyKind::two_dim_example: return "two_dim_example";
  }
  return "?";
}

struct FamilySpec {
  FamilyKind kind;
  std::size_t k = 0;
  std::vector<CycRat> parameters;
  std::uint64_t seed = 0;
};

struct NamedCheck {
  std::string name;
  bool ok;
};

struct TracePair {
  CycRat word;
  CycRat reversed;
};

/// Outcome of one family verification. `isomorphic` is only ever set after
/// an exact check that act(witness, V_{(B^-1)^tr}) = V_B.
struct WitnessReport {
  FamilySpec family;
  std::vector<NamedCheck> identities;
  std::optional<GLAlphaElement> witness;
  bool isomorphic = false;
  std::string notes;
  std::optional<TracePair> traces;

  bool all_identities_hold() const {
    for (const auto& c : identities)
      if (!c.ok) return false;
    return true;
  }
};

inline constexpr int kMaxSamplingAttempts = 64;

// ---------------------------------------------------------------------------
// Constructors

/// B = [[I_k, I_k], [A, I_k]] on (k,k;k,k-1,1). B is invertible exactly when
/// A - I_k is (Schur complement); A itself must be invertible for the witness.
inline QuiverRep make_even_family(std::size_t k, const CycMatrix& A) {
  if (k == 0) throw std::invalid_argument("even family needs k >= 1");
  if (A.rows() != k || A.cols() != k) throw ShapeError("A must be " + std::to_string(k) + "x" + std::to_string(k));
  const CycMatrix I = CycMatrix::identity(k);
  if (auto r = rank(A); r != k) throw SingularMatrix(k, r);
  if (auto r = rank(A - I); r != k) throw SingularMatrix(k, r);
  const CycMatrix B = block_compose({{I, I}, {A.without_blocks(), I}});
  return {DimVector{k, k, k, k - 1, 1}, B};
}

/// Random A with entries in Z[w] such that A and A - I are invertible.
inline CycMatrix sample_even_family_matrix(std::size_t k, Rng& rng, bool symmetric = false) {
  const CycMatrix I = CycMatrix::identity(k);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    CycMatrix A = random_matrix(rng, k, k);
    if (symmetric)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) A(i, j) = A(j, i);
    if (is_invertible(A) && is_invertible(A - I)) return A;
  }
  throw SamplingFailure("no admissible A after " + std::to_string(kMaxSamplingAttempts) + " attempts");
}

/// Random invertible B on `dims` whose B3 representation is simple.
inline QuiverRep sample_stable_rep(const DimVector& dims, Rng& rng) {
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    CycMatrix B = random_matrix(rng, dims.n(), dims.n());
    if (!is_invertible(B)) continue;
    QuiverRep V(dims, std::move(B));
    if (is_simple(build_rep(V))) return V;
  }
  throw SamplingFailure("no stable representation on " + to_string(dims) + " after " +
                        std::to_string(kMaxSamplingAttempts) + " attempts");
}

/// Generic point of (k+1,k;k,k,1), sampled from `seed`.
inline QuiverRep make_odd_family(std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("odd family needs k >= 1");
  Rng rng(seed);
  return sample_stable_rep(DimVector{k + 1, k, k, k, 1}, rng);
}

namespace detail {

inline CycMatrix parametrized(std::initializer_list<std::initializer_list<int>> pattern, const std::vector<CycRat>& params,
                              const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  CycMatrix B(pattern.size(), pattern.begin()->size());
  std::size_t i = 0;
  for (const auto& row : pattern) {
    std::size_t j = 0;
    for (int v : row) B(i, j++) = v;
    ++i;
  }
  for (std::size_t p = 0; p < slots.size(); ++p) B(slots[p].first, slots[p].second) = params[p];
  return B;
}

inline void require_invertible(const CycMatrix& B) {
  if (auto r = rank(B); r != B.rows()) throw SingularMatrix(B.rows(), r);
}

}  // namespace detail

/// Seven-parameter family on (3,3;2,2,2):
///
///   1 0 0 a 0 f
///   0 1 1 0 1 0
///   1 1 0 1 0 0
///   0 0 1 0 d e
///   0 1 0 b c 0
///   g 0 1 0 0 1
inline QuiverRep make_dim6_detecting(const std::vector<CycRat>& p) {
  if (p.size() != 7) throw std::invalid_argument("dim6 family takes 7 parameters a..g");
  CycMatrix B = detail::parametrized({{1, 0, 0, 0, 0, 0},
                                      {0, 1, 1, 0, 1, 0},
                                      {1, 1, 0, 1, 0, 0},
                                      {0, 0, 1, 0, 0, 0},
                                      {0, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 1}},
                                     p, {{0, 3}, {4, 3}, {4, 4}, {3, 4}, {3, 5}, {0, 5}, {5, 0}});
  detail::require_invertible(B);
  return {DimVector{3, 3, 2, 2, 2}, std::move(B)};
}

/// Five-parameter family on (4,2;2,2,2):
///
///   1 0 0 0 a 0
///   0 1 e 1 0 1
///   1 c d 0 1 0
///   0 0 0 1 0 b
///   0 1 0 0 1 0
///   0 0 1 0 0 1
inline QuiverRep make_dim42_exceptional(const std::vector<CycRat>& p) {
  if (p.size() != 5) throw std::invalid_argument("dim42 family takes 5 parameters a..e");
  CycMatrix B = detail::parametrized({{1, 0, 0, 0, 0, 0},
                                      {0, 1, 0, 1, 0, 1},
                                      {1, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 1, 0, 0},
                                      {0, 1, 0, 0, 1, 0},
                                      {0, 0, 1, 0, 0, 1}},
                                     p, {{0, 4}, {3, 5}, {2, 1}, {2, 2}, {1, 2}});
  detail::require_invertible(B);
  return {DimVector{4, 2, 2, 2, 2}, std::move(B)};
}

inline std::vector<CycRat> random_parameters(Rng& rng, std::size_t count) {
  std::vector<CycRat> p;
  for (std::size_t i = 0; i < count; ++i) p.push_back(random_zrho(rng));
  return p;
}

inline std::vector<CycRat> random_integer_parameters(Rng& rng, std::size_t count) {
  std::vector<CycRat> p;
  for (std::size_t i = 0; i < count; ++i) p.emplace_back(random_int(rng, -kSampleBound, kSampleBound));
  return p;
}

/// Resample parameters until the family member is invertible and simple.
template <class Make, class Draw>
std::pair<QuiverRep, std::vector<CycRat>> sample_family_point(Make make, Draw draw, Rng& rng) {
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    std::vector<CycRat> params = draw(rng);
    try {
      QuiverRep V = make(params);
      if (is_simple(build_rep(V))) return {std::move(V), std::move(params)};
    } catch (const SingularMatrix&) {
    }
  }
  throw SamplingFailure("no stable family member after " + std::to_string(kMaxSamplingAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Jumping lines on (2m,m;m,m,m)

struct JumpingPencils {
  TrivariatePoly from_B;      // det(sum_i C_i2 B_i2 x_i)
  TrivariatePoly from_tau;    // same construction on (B^-1)^tr
  bool block_identity = false;  // sum_i C_i2 B_i2 = I_m
};

namespace detail {

inline std::pair<TrivariatePoly, bool> jumping_pencil(const QuiverRep& V) {
  const DimVector& d = V.dims();
  const std::size_t m = d.b;
  const CycMatrix B = V.B().without_blocks();
  const CycMatrix C = inverse(B);
  std::vector<CycMatrix> products;
  CycMatrix sum(m, m);
  for (std::size_t i = 0; i < 3; ++i) {
    // C_i2: the b-rows of B^-1 against row block i of B; B_i2: row block i of B
    // against the b-columns.
    CycMatrix Ci2 = submatrix(C, d.a, i * m, m, m);
    CycMatrix Bi2 = submatrix(B, i * m, d.a, m, m);
    products.push_back(Ci2 * Bi2);
    sum += products.back();
  }
  return {pencil_det(products[0], products[1], products[2]), sum.is_identity()};
}

}  // namespace detail

inline JumpingPencils jumping_pencils(const QuiverRep& V) {
  const DimVector& d = V.dims();
  const std::size_t m = d.b;
  if (m == 0 || d.a != 2 * m || d.x != m || d.y != m || d.z != m)
    throw ShapeError("jumping lines need a dimension vector (2m,m;m,m,m), got " + to_string(d));
  auto [p, identity_ok] = detail::jumping_pencil(V);
  auto [q, tau_identity_ok] = detail::jumping_pencil(tau_quiver(V));
  return {std::move(p), std::move(q), identity_ok && tau_identity_ok};
}

inline bool jumping_lines_check(const QuiverRep& V) {
  auto pencils = jumping_pencils(V);
  return proportional(pencils.from_B, pencils.from_tau);
}

// ---------------------------------------------------------------------------
// Verifiers

/// Exact check of the explicit base change for (k,k;k,k-1,1). In general
///   (B^-1)^tr = [[-C^tr, I+C^tr], [C^tr, -C^tr]],  C = (A - I)^-1.
/// For symmetric A this is [[-C, I+C], [C, -C]] and
///   B = diag(-A^-1, I_k) (B^-1)^tr diag(C^-1 A, -C^-1),
/// i.e. act(g, V_{(B^-1)^tr}) = V_B for g = (A^-1 C, -C; -A^-1, I_{k-1}, I_1).
/// Without symmetry the witness comes from the orbit oracle.
inline WitnessReport verify_even_witness(std::size_t k, const CycMatrix& A, std::uint64_t seed = 0) {
  WitnessReport report{{FamilyKind::even_k, k, {}, seed}, {}, std::nullopt, false, "", std::nullopt};
  const QuiverRep V = make_even_family(k, A);
  const QuiverRep Vt = tau_quiver(V);
  const CycMatrix I = CycMatrix::identity(k);
  const CycMatrix Ainv = inverse(A);
  const CycMatrix C = inverse(A - I);
  const CycMatrix Cinv = A - I;
  const CycMatrix Ct = transpose(C);

  report.identities.push_back({"(B^-1)^tr = [[-C^tr, I+C^tr], [C^tr, -C^tr]]", Vt.B() == block_compose({{-Ct, I + Ct}, {Ct, -Ct}})});

  const CycMatrix left = block_diagonal({-Ainv, I});
  const CycMatrix right = block_diagonal({Cinv * A, -Cinv});
  const bool closed_form = Vt.B() == block_compose({{-C, I + C}, {C, -C}});
  const bool factorization = V.B() == left * Vt.B() * right;

  if (A == transpose(A)) {
    report.identities.push_back({"(B^-1)^tr = [[-C, I+C], [C, -C]]", closed_form});
    report.identities.push_back({"B = diag(-A^-1, I) (B^-1)^tr diag(C^-1 A, -C^-1)", factorization});
    report.identities.push_back({"left factor is block diagonal for (k, k-1, 1)", respects_partition(left, {k, k - 1, 1})});

    const GLAlphaElement g{Ainv * C, -C, -Ainv, CycMatrix::identity(k - 1), CycMatrix::identity(1)};
    const bool witness_ok = g.is_invertible() && act(g, Vt) == V;
    report.identities.push_back({"act((A^-1 C, -C; -A^-1, I, I), tau V) = V", witness_ok});

    // The tuple written inline next to the factorization has A C^-1 in the first
    // slot; that is M1^-1, so it only works when A C^-1 is an involution.
    const GLAlphaElement inline_tuple{A * Cinv, -C, -Ainv, CycMatrix::identity(k - 1), CycMatrix::identity(1)};
    const bool inline_ok = act(inline_tuple, Vt) == V;
    report.notes = std::string("factorization holds with M1 = A^-1 C; inline tuple (A C^-1, -C; ...) ") +
                   (inline_ok ? "also maps tau V to V" : "does not map tau V to V");
    if (report.all_identities_hold()) report.witness = g;
  } else {
    report.notes = std::string("A is not symmetric: [[-C, I+C], [C, -C]] ") + (closed_form ? "holds" : "fails") +
                   ", factorization " + (factorization ? "holds" : "fails") + "; witness from the orbit oracle";
    Rng rng(seed);
    const IsoResult iso = are_isomorphic(Vt, V, rng);
    report.identities.push_back({"Hom(tau V, V) is one-dimensional", iso.hom_dimension == 1});
    report.identities.push_back({"invertible witness with act(g, tau V) = V", iso.status == IsoStatus::isomorphic});
    if (report.all_identities_hold()) report.witness = iso.witness;
  }
  report.isomorphic = report.witness.has_value();
  return report;
}

/// Orbit oracle on a sampled generic point of (k+1,k;k,k,1).
inline WitnessReport verify_odd_family(std::size_t k, std::uint64_t seed) {
  WitnessReport report{{FamilyKind::odd_k, k, {}, seed}, {}, std::nullopt, false, "", std::nullopt};
  const QuiverRep V = make_odd_family(k, seed);
  const QuiverRep Vt = tau_quiver(V);
  const B3Rep phi = build_rep(V);
  report.identities.push_back({"dimension vector recovered from spectra", recover_dimvector(phi) == V.dims()});
  Rng rng(seed);
  const IsoResult iso = are_isomorphic(Vt, V, rng);
  report.identities.push_back({"Hom(tau V, V) is one-dimensional", iso.hom_dimension == 1});
  report.identities.push_back({"invertible witness with act(g, tau V) = V", iso.status == IsoStatus::isomorphic});
  report.notes = "hom dimension " + std::to_string(iso.hom_dimension) + ", " + to_string(iso.status);
  if (iso.witness && report.all_identities_hold()) {
    report.witness = iso.witness;
    report.isomorphic = true;
  }
  return report;
}

/// (4,2;2,2,2): orbit oracle plus the jumping-lines comparison.
inline WitnessReport verify_dim42(const std::vector<CycRat>& params, std::uint64_t seed = 0) {
  WitnessReport report{{FamilyKind::dim42_exceptional, 0, params, seed}, {}, std::nullopt, false, "", std::nullopt};
  const QuiverRep V = make_dim42_exceptional(params);
  const QuiverRep Vt = tau_quiver(V);
  report.identities.push_back({"representation is simple", is_simple(build_rep(V))});
  const JumpingPencils pencils = jumping_pencils(V);
  report.identities.push_back({"sum_i C_i2 B_i2 = I_2", pencils.block_identity});
  report.identities.push_back({"jumping-line curves of B and (B^-1)^tr agree",
                               proportional(pencils.from_B, pencils.from_tau)});
  Rng rng(seed);
  const IsoResult iso = are_isomorphic(Vt, V, rng);
  report.identities.push_back({"Hom(tau V, V) is one-dimensional", iso.hom_dimension == 1});
  report.identities.push_back({"invertible witness with act(g, tau V) = V", iso.status == IsoStatus::isomorphic});
  report.notes = "jumping curve " + to_string(pencils.from_B) + " = 0";
  if (iso.witness && report.all_identities_hold()) {
    report.witness = iso.witness;
    report.isomorphic = true;
  }
  return report;
}

/// (1,1;1,1,0) with B = [[1,1],[a,1]]:
///   (B^-1)^tr = diag(1, -1/a) B diag(1/(1-a), -a/(1-a))
inline WitnessReport verify_two_dim_example(const CycRat& a) {
  if (a == CycRat(1)) throw std::invalid_argument("a = 1 makes B singular");
  if (a.is_zero()) throw std::invalid_argument("a = 0 is excluded");
  WitnessReport report{{FamilyKind::two_dim_example, 0, {a}, 0}, {}, std::nullopt, false, "", std::nullopt};
  const QuiverRep V(DimVector{1, 1, 1, 1, 0}, CycMatrix{{1, 1}, {a, 1}});
  const QuiverRep Vt = tau_quiver(V);
  const CycRat s = (CycRat(1) - a).inv();

  report.identities.push_back({"(B^-1)^tr = 1/(1-a) [[1,-a],[-1,1]]", Vt.B() == s * CycMatrix{{1, -a}, {-1, 1}}});
  const CycMatrix left{{1, 0}, {0, -a.inv()}};
  const CycMatrix right{{s, 0}, {0, -a * s}};
  report.identities.push_back({"(B^-1)^tr = diag(1, -1/a) B diag(1/(1-a), -a/(1-a))", Vt.B() == left * V.B() * right});

  // act(h, V) = tau V for h = (1-a, -(1-a)/a; 1, -1/a, -); store h^-1.
  const GLAlphaElement h{CycMatrix{{CycRat(1) - a}}, CycMatrix{{-(CycRat(1) - a) / a}}, CycMatrix{{1}},
                         CycMatrix{{-a.inv()}}, CycMatrix(0, 0)};
  const GLAlphaElement g = h.inverse();
  report.identities.push_back({"act(g, tau V) = V", act(g, Vt) == V});
  if (report.all_identities_hold()) {
    report.witness = g;
    report.isomorphic = true;
  }
  return report;
}

/// Reversion check on the seven-parameter (3,3;2,2,2) family for a word w.
inline WitnessReport detect_reversion_dim6(const std::vector<CycRat>& params, const BraidWord& w, std::uint64_t seed = 0) {
  WitnessReport report{{FamilyKind::dim6_detecting, 0, params, seed}, {}, std::nullopt, false, "", std::nullopt};
  const QuiverRep V = make_dim6_detecting(params);
  const B3Rep phi = build_rep(V);
  report.identities.push_back({"representation is simple", is_simple(phi)});
  report.traces = TracePair{trace_of(phi, w), trace_of(phi, reverse_braid(w))};
  report.identities.push_back({"Tr(w) != Tr(reverse w)", report.traces->word != report.traces->reversed});
  Rng rng(seed);
  const IsoResult iso = are_isomorphic(tau_quiver(V), V, rng);
  report.identities.push_back({"no witness for tau V = V", iso.status == IsoStatus::not_isomorphic});
  report.notes = "hom dimension " + std::to_string(iso.hom_dimension) + ", " + to_string(iso.status);
  return report;
}

}  // namespace braidrev
