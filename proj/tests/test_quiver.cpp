#include <gtest/gtest.h>

#include "braidrev/b3rep.hpp"
#include "braidrev/families.hpp"
#include "braidrev/quiver.hpp"

namespace braidrev {
namespace {

CycMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    CycMatrix m = random_matrix(rng, n, n);
    if (is_invertible(m)) return m;
  }
}

GLAlphaElement random_group_element(Rng& rng, const DimVector& d) {
  return {random_invertible(rng, d.a), random_invertible(rng, d.b), random_invertible(rng, d.x),
          random_invertible(rng, d.y), random_invertible(rng, d.z)};
}

TEST(DimVector, SimpleCriterion) {
  EXPECT_TRUE(is_simple_dimvector({3, 3, 2, 2, 2}));
  EXPECT_TRUE(is_simple_dimvector({1, 0, 1, 0, 0}));
  EXPECT_TRUE(is_simple_dimvector({0, 1, 0, 0, 1}));
  EXPECT_FALSE(is_simple_dimvector({5, 2, 3, 2, 2}));
  EXPECT_TRUE(is_simple_dimvector({1, 1, 1, 1, 0}));
  EXPECT_TRUE(is_simple_dimvector({1, 1, 0, 1, 1}));
  EXPECT_FALSE(is_simple_dimvector({2, 0, 1, 1, 0}));
  EXPECT_FALSE(is_simple_dimvector({2, 2, 2, 2, 0}));
  EXPECT_FALSE(is_simple_dimvector({3, 3, 2, 2, 1}));  // unbalanced
  EXPECT_FALSE(is_simple_dimvector({0, 0, 0, 0, 0}));
}

TEST(QuiverRep, ShapeValidation) {
  EXPECT_THROW(QuiverRep(DimVector{1, 1, 1, 1, 0}, CycMatrix::identity(3)), ShapeError);
  EXPECT_THROW(QuiverRep(DimVector{1, 1, 1, 0, 0}, CycMatrix::identity(2)), ShapeError);
  const QuiverRep V(DimVector{2, 1, 1, 1, 1}, CycMatrix::identity(3));
  EXPECT_EQ(V.B().row_blocks(), (Blocks{1, 1, 1}));
  EXPECT_EQ(V.B().col_blocks(), (Blocks{2, 1}));
  EXPECT_EQ(V.block(0, 0), (CycMatrix{{1, 0}}));
}

TEST(Act, IdentityAndInverse) {
  Rng rng(5);
  const DimVector d{2, 1, 1, 1, 1};
  const QuiverRep V(d, random_invertible(rng, 3));
  EXPECT_EQ(act(GLAlphaElement::identity(d), V), V);
  const GLAlphaElement g = random_group_element(rng, d);
  EXPECT_EQ(act(g, act(g.inverse(), V)), V);
  EXPECT_THROW(act(GLAlphaElement::identity({1, 2, 1, 1, 1}), V), ShapeError);
}

TEST(Act, IsAGroupAction) {
  Rng rng(6);
  for (const DimVector d : {DimVector{2, 1, 1, 1, 1}, DimVector{3, 3, 2, 2, 2}, DimVector{1, 1, 1, 0, 1}}) {
    const QuiverRep V(d, random_invertible(rng, d.n()));
    const GLAlphaElement g = random_group_element(rng, d), h = random_group_element(rng, d);
    EXPECT_EQ(act(g * h, V), act(g, act(h, V)));
  }
}

TEST(Tau, IsAnExactInvolution) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const DimVector d{3, 2, 2, 2, 1};
    const QuiverRep V(d, random_invertible(rng, 5));
    const QuiverRep t = tau_quiver(V);
    EXPECT_EQ(t.dims(), d);
    EXPECT_EQ(tau_quiver(t), V);
  }
}

TEST(Tau, TwoDimensionalExample) {
  const QuiverRep V(DimVector{1, 1, 1, 0, 1}, CycMatrix{{1, 1}, {2, 1}});
  // 1/(1-2) [[1, -2], [-1, 1]]
  EXPECT_EQ(tau_quiver(V).B(), (CycMatrix{{-1, 2}, {1, -1}}));
  EXPECT_THROW(tau_quiver(QuiverRep(DimVector{1, 1, 1, 0, 1}, CycMatrix{{1, 1}, {1, 1}})), SingularMatrix);
}

TEST(HomSpace, SchurForStableRep) {
  Rng rng(8);
  const QuiverRep V = sample_stable_rep({2, 1, 1, 1, 1}, rng);
  const auto hom = hom_space(V, V);
  ASSERT_EQ(hom.size(), 1u);
  // spanned by a scalar multiple of the identity tuple
  const CycRat c = hom[0].M1(0, 0);
  EXPECT_EQ(hom[0], c * GLAlphaElement::identity(V.dims()));
}

TEST(HomSpace, ZeroBetweenNonIsomorphicStables) {
  Rng rng(9);
  const DimVector d{3, 3, 2, 2, 2};
  const QuiverRep V = sample_stable_rep(d, rng);
  const QuiverRep W = sample_stable_rep(d, rng);
  EXPECT_TRUE(hom_space(V, W).empty());
  EXPECT_THROW(hom_space(V, QuiverRep(DimVector{3, 3, 3, 2, 1}, CycMatrix::identity(6))), ShapeError);
}

TEST(HomSpace, DirectSumOfTwoStables) {
  // (1,0;1,0,0) with B=[1] and (0,1;0,0,1) with B=[1] are non-isomorphic
  // (different dimension vectors); their sum lives on (1,1;1,0,1).
  const QuiverRep S(DimVector{1, 1, 1, 0, 1}, CycMatrix::identity(2));
  EXPECT_EQ(hom_space(S, S).size(), 2u);
  EXPECT_FALSE(is_simple(build_rep(S)));
}

TEST(Isomorphism, ReflexiveWithIdentityLikeWitness) {
  Rng rng(10);
  const QuiverRep V = sample_stable_rep({3, 2, 2, 2, 1}, rng);
  const IsoResult r = are_isomorphic(V, V);
  ASSERT_EQ(r.status, IsoStatus::isomorphic);
  EXPECT_EQ(act(*r.witness, V), V);
  EXPECT_EQ(r.hom_dimension, 1u);
}

TEST(Isomorphism, WitnessAgreesWithActionAndIsSymmetric) {
  Rng rng(11);
  const DimVector d{3, 3, 3, 2, 1};
  const QuiverRep V = sample_stable_rep(d, rng);
  const QuiverRep W = act(random_group_element(rng, d), V);
  const IsoResult forward = are_isomorphic(V, W);
  const IsoResult backward = are_isomorphic(W, V);
  ASSERT_TRUE(forward);
  ASSERT_TRUE(backward);
  EXPECT_EQ(act(*forward.witness, V), W);
  EXPECT_EQ(act(*backward.witness, W), V);
  EXPECT_TRUE(forward.witness->is_invertible());
}

TEST(Isomorphism, DistinctGenericOrbitsAtDetectingComponent) {
  Rng rng(12);
  const DimVector d{3, 3, 2, 2, 2};
  const QuiverRep V = sample_stable_rep(d, rng);
  const QuiverRep W = sample_stable_rep(d, rng);
  const IsoResult r = are_isomorphic(V, W);
  EXPECT_EQ(r.status, IsoStatus::not_isomorphic);
  EXPECT_FALSE(r.witness.has_value());
  // Confirmed by a separating trace.
  const B3Rep pv = build_rep(V), pw = build_rep(W);
  EXPECT_NE(trace_of(pv, parse_braid("s1 s2^-1")), trace_of(pw, parse_braid("s1 s2^-1")));
}

TEST(Isomorphism, EvenFamilyTauIsInOrbit) {
  Rng rng(13);
  const CycMatrix A = sample_even_family_matrix(3, rng);
  const QuiverRep V = make_even_family(3, A);
  const IsoResult r = are_isomorphic(V, tau_quiver(V));
  ASSERT_EQ(r.status, IsoStatus::isomorphic);
  EXPECT_EQ(act(*r.witness, V), tau_quiver(V));
}

TEST(Isomorphism, NonStableLargeHomSpace) {
  // B = I on (1,1;1,0,1) is the direct sum of two 1-dimensional pieces; its
  // 2-dimensional endomorphism space contains invertible elements.
  const QuiverRep S(DimVector{1, 1, 1, 0, 1}, CycMatrix::identity(2));
  Rng rng(0);
  const IsoResult r = are_isomorphic(S, S, rng);
  EXPECT_EQ(r.hom_dimension, 2u);
  EXPECT_EQ(r.status, IsoStatus::isomorphic);
}

}  // namespace
}  // namespace braidrev

namespace braidrev {
namespace {

// Direct sum: each vertex space is V's part followed by W's part.
QuiverRep direct_sum(const QuiverRep& V, const QuiverRep& W) {
  const DimVector dv = V.dims(), dw = W.dims();
  const DimVector d{dv.a + dw.a, dv.b + dw.b, dv.x + dw.x, dv.y + dw.y, dv.z + dw.z};
  auto positions = [](const Blocks& first, const Blocks& second) {
    std::vector<std::size_t> from_first, from_second;
    std::size_t pos = 0;
    for (std::size_t blk = 0; blk < first.size(); ++blk) {
      for (std::size_t i = 0; i < first[blk]; ++i) from_first.push_back(pos++);
      for (std::size_t i = 0; i < second[blk]; ++i) from_second.push_back(pos++);
    }
    return std::pair{from_first, from_second};
  };
  auto [rv, rw] = positions(dv.row_blocks(), dw.row_blocks());
  auto [cv, cw] = positions(dv.col_blocks(), dw.col_blocks());
  CycMatrix B(d.n(), d.n());
  for (std::size_t i = 0; i < dv.n(); ++i)
    for (std::size_t j = 0; j < dv.n(); ++j) B(rv[i], cv[j]) = V.B()(i, j);
  for (std::size_t i = 0; i < dw.n(); ++i)
    for (std::size_t j = 0; j < dw.n(); ++j) B(rw[i], cw[j]) = W.B()(i, j);
  return {d, B};
}

TEST(HomSpace, DirectSumOfStablesOfDifferentComponents) {
  Rng rng(21);
  const QuiverRep V = sample_stable_rep({2, 1, 1, 1, 1}, rng);
  const QuiverRep W = sample_stable_rep({1, 1, 1, 1, 0}, rng);
  const QuiverRep S = direct_sum(V, W);
  EXPECT_EQ(S.dims(), (DimVector{3, 2, 2, 2, 1}));
  EXPECT_EQ(hom_space(S, S).size(), 2u);
  EXPECT_FALSE(is_simple(build_rep(S)));
  EXPECT_EQ(burnside_dimension(build_rep(S)), 3u * 3u + 2u * 2u);
}

TEST(HomSpace, DirectSumOfTwoNonIsomorphicPointsOfOneComponent) {
  Rng rng(22);
  const QuiverRep V = sample_stable_rep({2, 1, 1, 1, 1}, rng);
  const QuiverRep W = sample_stable_rep({2, 1, 1, 1, 1}, rng);
  ASSERT_FALSE(are_isomorphic(V, W));
  const QuiverRep S = direct_sum(V, W);
  const auto hom = hom_space(S, S);
  EXPECT_EQ(hom.size(), 2u);
  Rng search(0);
  EXPECT_EQ(are_isomorphic(S, S, search).status, IsoStatus::isomorphic);
}

}  // namespace
}  // namespace braidrev
