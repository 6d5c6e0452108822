#include <gtest/gtest.h>

#include "braidrev/families.hpp"

namespace braidrev {
namespace {

std::vector<CycRat> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

void expect_family_invariants(const QuiverRep& V) {
  EXPECT_TRUE(is_invertible(V.B()));
  const B3Rep phi = build_rep(V);
  EXPECT_EQ(recover_dimvector(phi), V.dims());
  EXPECT_TRUE(power(phi.X1() * phi.X2(), 3).is_identity());
}

TEST(EvenFamily, Construction) {
  const QuiverRep V1 = make_even_family(1, CycMatrix{{2}});
  EXPECT_EQ(V1.dims(), (DimVector{1, 1, 1, 0, 1}));
  EXPECT_EQ(V1.B(), (CycMatrix{{1, 1}, {2, 1}}));

  const QuiverRep V2 = make_even_family(2, CycMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(V2.dims(), (DimVector{2, 2, 2, 1, 1}));
  EXPECT_EQ(V2.B().row_blocks(), (Blocks{2, 1, 1}));
  EXPECT_EQ(V2.B().col_blocks(), (Blocks{2, 2}));
  expect_family_invariants(V2);

  EXPECT_THROW(make_even_family(2, CycMatrix{{1, 0}, {0, 3}}), SingularMatrix);  // A - I singular
  EXPECT_THROW(make_even_family(2, CycMatrix{{0, 0}, {0, 3}}), SingularMatrix);  // A singular
  EXPECT_THROW(make_even_family(2, CycMatrix{{2}}), ShapeError);
}

TEST(EvenFamily, ClosedFormForSymmetricA) {
  for (std::size_t k = 1; k <= 4; ++k) {
    Rng rng(100 + k);
    for (int trial = 0; trial < 3; ++trial) {
      const CycMatrix A = sample_even_family_matrix(k, rng, true);
      ASSERT_EQ(A, transpose(A));
      const WitnessReport r = verify_even_witness(k, A);
      ASSERT_EQ(r.identities.size(), 5u);
      for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
      ASSERT_TRUE(r.isomorphic);
      const QuiverRep V = make_even_family(k, A);
      EXPECT_EQ(act(*r.witness, tau_quiver(V)), V);
    }
  }
}

TEST(EvenFamily, GeneralAUsesTransposedFormAndOracle) {
  const CycMatrix A{{2, 1}, {3, 5}};
  ASSERT_TRUE(is_simple(build_rep(make_even_family(2, A))));
  const WitnessReport r = verify_even_witness(2, A);
  for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
  EXPECT_NE(r.notes.find("[[-C, I+C], [C, -C]] fails"), std::string::npos) << r.notes;
  ASSERT_TRUE(r.isomorphic);
  const QuiverRep V = make_even_family(2, A);
  EXPECT_EQ(act(*r.witness, tau_quiver(V)), V);

  for (std::size_t k = 2; k <= 3; ++k) {
    Rng rng(200 + k);
    const WitnessReport s = verify_even_witness(k, sample_even_family_matrix(k, rng), 7);
    for (const auto& c : s.identities) EXPECT_TRUE(c.ok) << c.name;
    EXPECT_TRUE(s.isomorphic);
  }
}

TEST(EvenFamily, KOneByHand) {
  const WitnessReport r = verify_even_witness(1, CycMatrix{{2}});
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(tau_quiver(make_even_family(1, CycMatrix{{2}})).B(), (CycMatrix{{-1, 2}, {1, -1}}));
  // A = 2: C = 1, so g = (A^-1 C, -C; -A^-1, -, 1) = (1/2, -1; -1/2, -, 1)
  EXPECT_EQ(r.witness->M1, CycMatrix{{Rational(1, 2)}});
  EXPECT_EQ(r.witness->M2, CycMatrix{{-1}});
  EXPECT_EQ(r.witness->N1, CycMatrix{{Rational(-1, 2)}});
}

TEST(EvenFamily, AEqualsTwiceIdentity) {
  const CycMatrix A = CycMatrix::scalar(3, 2);
  EXPECT_EQ(inverse(A - CycMatrix::identity(3)), CycMatrix::identity(3));
  EXPECT_TRUE(verify_even_witness(3, A).isomorphic);
}

TEST(EvenFamily, InlineTupleIsTheInverseInTheFirstSlot) {
  const WitnessReport r = verify_even_witness(3, CycMatrix::scalar(3, 2));
  EXPECT_NE(r.notes.find("does not map"), std::string::npos) << r.notes;
}

TEST(OddFamily, SmallK) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const QuiverRep V = make_odd_family(k, 17);
    EXPECT_EQ(V.dims(), (DimVector{k + 1, k, k, k, 1}));
    expect_family_invariants(V);
    const WitnessReport r = verify_odd_family(k, 17);
    for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
    ASSERT_TRUE(r.isomorphic);
    EXPECT_EQ(act(*r.witness, tau_quiver(V)), V);
  }
  EXPECT_THROW(make_odd_family(0, 1), std::invalid_argument);
}

TEST(OddFamily, DeterministicInSeed) {
  EXPECT_EQ(make_odd_family(2, 5), make_odd_family(2, 5));
  EXPECT_FALSE(make_odd_family(2, 5) == make_odd_family(2, 6));
}

TEST(Dim6Family, StructureAndSeparation) {
  const QuiverRep V = make_dim6_detecting(ints({2, 3, 5, 7, 11, 13, 17}));
  EXPECT_EQ(V.dims(), (DimVector{3, 3, 2, 2, 2}));
  EXPECT_EQ(V.B().row_blocks(), (Blocks{2, 2, 2}));
  EXPECT_EQ(V.B().col_blocks(), (Blocks{3, 3}));
  const std::vector<CycRat> row0{1, 0, 0, 2, 0, 13};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(V.B()(0, j), row0[j]);
  EXPECT_EQ(V.B()(5, 0), CycRat(17));
  // det B = -3672 (sympy oracle, tests/oracles/generate_oracles.py)
  EXPECT_EQ(determinant(V.B()), CycRat(-3672));
  expect_family_invariants(V);

  const WitnessReport r = detect_reversion_dim6(ints({2, 3, 5, 7, 11, 13, 17}), knot_8_17_braid());
  for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
  EXPECT_FALSE(r.isomorphic);
  ASSERT_TRUE(r.traces.has_value());
  // Frozen from the sympy oracle.
  EXPECT_EQ(r.traces->word, parse_cyc("23771523926248006054971349/6226678330992250327296-208236590935/83841135993w"));
  EXPECT_EQ(r.traces->reversed,
            parse_cyc("23786989154064133431379669/6226678330992250327296+208236590935/83841135993w"));
}

TEST(Dim6Family, DegenerateParameters) {
  // All-zero parameters still give det B = 1.
  EXPECT_EQ(determinant(make_dim6_detecting(ints({0, 0, 0, 0, 0, 0, 0})).B()), CycRat(1));
  EXPECT_THROW(make_dim6_detecting(ints({1, 0, 0, 0, 0, 0, 0})), SingularMatrix);
  EXPECT_THROW(make_dim6_detecting(ints({1, 2})), std::invalid_argument);
}

TEST(Dim42Family, StructureAndFixedness) {
  const auto params = ints({2, 3, 5, 7, 11});
  const QuiverRep V = make_dim42_exceptional(params);
  EXPECT_EQ(V.dims(), (DimVector{4, 2, 2, 2, 2}));
  EXPECT_EQ(V.B().col_blocks(), (Blocks{4, 2}));
  const std::vector<CycRat> row3{0, 0, 0, 1, 0, 3};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(V.B()(3, j), row3[j]);
  EXPECT_EQ(determinant(V.B()), CycRat(-71));
  expect_family_invariants(V);
  EXPECT_TRUE(is_simple(build_rep(V)));

  const WitnessReport r = verify_dim42(params);
  for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(act(*r.witness, tau_quiver(V)), V);

  EXPECT_THROW(make_dim42_exceptional(ints({0, 0, 0, 1, 0})), SingularMatrix);
}

TEST(JumpingLines, PencilMatchesOracle) {
  const QuiverRep V = make_dim42_exceptional(ints({2, 3, 5, 7, 11}));
  const JumpingPencils pencils = jumping_pencils(V);
  EXPECT_TRUE(pencils.block_identity);
  EXPECT_EQ(pencils.from_B.degree(), 2u);
  // Frozen from the sympy oracle.
  TrivariatePoly expected(2);
  expected.set({2, 0, 0}, Rational(-2, 71));
  expected.set({1, 1, 0}, Rational(7, 71));
  expected.set({1, 0, 1}, Rational(17, 71));
  expected.set({0, 2, 0}, Rational(-3, 71));
  expected.set({0, 1, 1}, Rational(4, 71));
  expected.set({0, 0, 2}, Rational(48, 71));
  EXPECT_EQ(pencils.from_B, expected);
  EXPECT_TRUE(proportional(pencils.from_B, pencils.from_tau));
  EXPECT_TRUE(jumping_lines_check(V));
}

TEST(JumpingLines, BlockIdentityBeforeDeterminant) {
  Rng rng(3);
  const QuiverRep V = sample_stable_rep({4, 2, 2, 2, 2}, rng);
  const CycMatrix B = V.B().without_blocks();
  const CycMatrix C = inverse(B);
  CycMatrix sum(2, 2);
  for (std::size_t i = 0; i < 3; ++i) sum += submatrix(C, 4, 2 * i, 2, 2) * submatrix(B, 2 * i, 4, 2, 2);
  EXPECT_TRUE(sum.is_identity());
  EXPECT_TRUE(jumping_pencils(V).block_identity);
}

TEST(JumpingLines, InvariantUnderGroupAction) {
  Rng rng(4);
  const QuiverRep V = make_dim42_exceptional(ints({2, 3, 5, 7, 11}));
  auto inv = [&](std::size_t n) {
    CycMatrix m = random_matrix(rng, n, n);
    while (!is_invertible(m)) m = random_matrix(rng, n, n);
    return m;
  };
  const GLAlphaElement g{inv(4), inv(2), inv(2), inv(2), inv(2)};
  const QuiverRep W = act(g, V);
  EXPECT_TRUE(jumping_lines_check(W));
  EXPECT_TRUE(proportional(jumping_pencils(W).from_B, jumping_pencils(V).from_B));
}

TEST(JumpingLines, ShapeErrors) {
  EXPECT_THROW(jumping_lines_check(make_dim6_detecting(ints({2, 3, 5, 7, 11, 13, 17}))), ShapeError);
}

TEST(JumpingLines, RankThreeCase) {
  Rng rng(5);
  const QuiverRep V = sample_stable_rep({6, 3, 3, 3, 3}, rng);
  const JumpingPencils p = jumping_pencils(V);
  EXPECT_EQ(p.from_B.degree(), 3u);
  EXPECT_TRUE(p.block_identity);
}

TEST(TwoDimExample, Identities) {
  for (const CycRat a : {CycRat(2), CycRat(-1), CycRat(Rational(1, 3), 2)}) {
    const WitnessReport r = verify_two_dim_example(a);
    for (const auto& c : r.identities) EXPECT_TRUE(c.ok) << c.name;
    EXPECT_TRUE(r.isomorphic);
  }
  EXPECT_THROW(verify_two_dim_example(1), std::invalid_argument);
  EXPECT_THROW(verify_two_dim_example(0), std::invalid_argument);
}

}  // namespace
}  // namespace braidrev
