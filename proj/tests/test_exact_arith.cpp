#include <gtest/gtest.h>

#include "braidrev/cyc.hpp"
#include "braidrev/poly.hpp"
#include "braidrev/random.hpp"

namespace braidrev {
namespace {

const CycRat w = CycRat::rho();

CycRat random_cyc(Rng& rng) {
  // Small numerators and denominators so that nontrivial reduction happens.
  auto q = [&] { return make_rational(random_int(rng, -9, 9), random_int(rng, 1, 6)); };
  return {q(), q()};
}

TEST(CycRat, AdditionBasics) {
  EXPECT_EQ(CycRat(1) + w, CycRat(1, 1));
  const CycRat u(Rational(3, 2), -4);
  EXPECT_EQ(u + CycRat(), u);
  EXPECT_TRUE((CycRat(1, 1) + CycRat::rho_squared()).is_zero());
}

TEST(CycRat, MultiplicationUsesRhoRelation) {
  EXPECT_EQ(w * w, CycRat(-1, -1));
  EXPECT_EQ(w * w * w, CycRat(1));
  // (1 + w)^2 = 1 + 2w + w^2 = 1 + 2w - 1 - w = w
  EXPECT_EQ(CycRat(1, 1) * CycRat(1, 1), w);
  EXPECT_TRUE((CycRat(1) + w + w * w).is_zero());
}

TEST(CycRat, Inverse) {
  EXPECT_EQ(CycRat(1).inv(), CycRat(1));
  EXPECT_EQ(w.inv(), CycRat(-1, -1));
  const CycRat u(2, 1);
  const CycRat expected(Rational(1, 3), Rational(-1, 3));
  EXPECT_EQ(u.inv(), expected);
  EXPECT_EQ(u * expected, CycRat(1));
  EXPECT_THROW(CycRat().inv(), DivisionByZero);
  EXPECT_THROW(CycRat(1) / CycRat(), DivisionByZero);
}

TEST(CycRat, NormIsMultiplicative) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const CycRat u = random_cyc(rng), v = random_cyc(rng);
    EXPECT_EQ((u * v).norm(), u.norm() * v.norm());
    EXPECT_EQ((u * u.conj()).rh(), 0);
  }
}

TEST(CycRat, FieldAxiomsOnRandomTriples) {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const CycRat u = random_cyc(rng), v = random_cyc(rng), t = random_cyc(rng);
    EXPECT_EQ((u * v) * t, u * (v * t));
    EXPECT_EQ((u + v) + t, u + (v + t));
    EXPECT_EQ(u * (v + t), u * v + u * t);
    EXPECT_EQ(u * v, v * u);
    if (!u.is_zero()) EXPECT_EQ(u * u.inv(), CycRat(1));
    for (const CycRat& r : {u + v, u * v, u - t}) {
      EXPECT_TRUE(is_canonical(r.re()));
      EXPECT_TRUE(is_canonical(r.rh()));
    }
  }
}

TEST(CycRat, TextSyntax) {
  EXPECT_EQ(to_string(CycRat(Rational(-3, 2))), "-3/2");
  EXPECT_EQ(to_string(CycRat(0, 5)), "5w");
  EXPECT_EQ(to_string(CycRat(Rational(1, 3), -2)), "1/3-2w");
  EXPECT_EQ(to_string(CycRat(1, 1)), "1+1w");
  EXPECT_EQ(to_string(CycRat()), "0");

  EXPECT_EQ(parse_cyc("-3/2"), CycRat(Rational(-3, 2)));
  EXPECT_EQ(parse_cyc("5w"), CycRat(0, 5));
  EXPECT_EQ(parse_cyc("1/3-2w"), CycRat(Rational(1, 3), -2));
  EXPECT_EQ(parse_cyc("-w"), CycRat(0, -1));
  EXPECT_EQ(parse_cyc("4/6"), CycRat(Rational(2, 3)));

  EXPECT_THROW(parse_cyc(""), ParseError);
  EXPECT_THROW(parse_cyc("1/0"), ParseError);
  EXPECT_THROW(parse_cyc("abc"), ParseError);
  EXPECT_THROW(parse_cyc("1+2"), ParseError);
}

TEST(CycRat, TextRoundTripProperty) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const CycRat u = random_cyc(rng);
    EXPECT_EQ(parse_cyc(to_string(u)), u) << to_string(u);
  }
}

TEST(Poly, LinearSums) {
  const auto p = TrivariatePoly::x() + TrivariatePoly::y();
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.terms().size(), 2u);
  const auto zero = p * CycRat();
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), 1u);
}

TEST(Poly, Product) {
  const auto x = TrivariatePoly::x(), y = TrivariatePoly::y();
  const auto p = (x + y) * (x - y);
  TrivariatePoly expected(2);
  expected.set({2, 0, 0}, 1);
  expected.set({0, 2, 0}, -1);
  EXPECT_EQ(p, expected);
  EXPECT_EQ(to_string(p), "x^2 - y^2");
}

TEST(Poly, DegreeMismatchIsAnError) {
  auto p = TrivariatePoly::x();
  EXPECT_THROW(p + TrivariatePoly::x() * TrivariatePoly::x(), DegreeMismatch);
  EXPECT_THROW(p.set({1, 1, 0}, 1), DegreeMismatch);
}

TEST(Poly, Proportional) {
  const auto x = TrivariatePoly::x(), y = TrivariatePoly::y();
  EXPECT_TRUE(proportional(x * x, x * x * CycRat(3)));
  EXPECT_TRUE(proportional(x * x, x * x * CycRat(2, -7)));
  EXPECT_FALSE(proportional(x * x, x * y));
  EXPECT_TRUE(proportional(TrivariatePoly(2), TrivariatePoly(2)));
  EXPECT_FALSE(proportional(x * x, TrivariatePoly(2)));
  EXPECT_FALSE(proportional(x, x * x));
}

TEST(Poly, Evaluate) {
  const auto x = TrivariatePoly::x(), y = TrivariatePoly::y(), z = TrivariatePoly::z();
  const auto p = x * y + z * z * CycRat(0, 1);
  // 2*3 + w*5^2
  EXPECT_EQ(p.evaluate(2, 3, 5), CycRat(6, 25));
}

}  // namespace
}  // namespace braidrev
