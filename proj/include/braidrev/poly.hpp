#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>

#include "braidrev/cyc.hpp"
#include "braidrev/error.hpp"

namespace braidrev {

/// Homogeneous polynomial over Q(w) in the variables x, y, z.
///
/// Only nonzero coefficients are stored, and every stored monomial has total
/// degree equal to degree(). The zero polynomial still carries a degree so that
/// sums of determinants keep a well defined degree.
class TrivariatePoly {
 public:
  using Exponents = std::array<unsigned, 3>;
  using Terms = std::map<Exponents, CycRat>;

  explicit TrivariatePoly(unsigned degree = 0) : degree_(degree) {}

  static TrivariatePoly constant(const CycRat& c) {
    TrivariatePoly p(0);
    p.set({0, 0, 0}, c);
    return p;
  }

  // cx*x + cy*y + cz*z
  static TrivariatePoly linear(const CycRat& cx, const CycRat& cy, const CycRat& cz) {
    TrivariatePoly p(1);
    p.set({1, 0, 0}, cx);
    p.set({0, 1, 0}, cy);
    p.set({0, 0, 1}, cz);
    return p;
  }

  static TrivariatePoly x() { return linear(1, 0, 0); }
  static TrivariatePoly y() { return linear(0, 1, 0); }
  static TrivariatePoly z() { return linear(0, 0, 1); }

  unsigned degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  CycRat coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycRat{} : it->second;
  }

  void set(const Exponents& e, const CycRat& c) {
    if (e[0] + e[1] + e[2] != degree_) throw DegreeMismatch("monomial degree does not match polynomial degree");
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  TrivariatePoly& operator+=(const TrivariatePoly& o) {
    if (o.degree_ != degree_)
      throw DegreeMismatch("adding polynomials of degree " + std::to_string(degree_) + " and " +
                           std::to_string(o.degree_));
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }

  TrivariatePoly& operator-=(const TrivariatePoly& o) { return *this += o * CycRat(-1); }

  friend TrivariatePoly operator+(TrivariatePoly a, const TrivariatePoly& b) { return a += b; }
  friend TrivariatePoly operator-(TrivariatePoly a, const TrivariatePoly& b) { return a -= b; }

  friend TrivariatePoly operator*(const TrivariatePoly& p, const CycRat& c) {
    TrivariatePoly out(p.degree_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, v * c);
    return out;
  }
  friend TrivariatePoly operator*(const CycRat& c, const TrivariatePoly& p) { return p * c; }

  // Product of homogeneous polynomials; degrees add.
  friend TrivariatePoly operator*(const TrivariatePoly& p, const TrivariatePoly& q) {
    TrivariatePoly out(p.degree_ + q.degree_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) out.accumulate({ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]}, cp * cq);
    return out;
  }

  CycRat evaluate(const CycRat& vx, const CycRat& vy, const CycRat& vz) const {
    CycRat sum;
    for (const auto& [e, c] : terms_) {
      CycRat term = c;
      for (unsigned i = 0; i < e[0]; ++i) term *= vx;
      for (unsigned i = 0; i < e[1]; ++i) term *= vy;
      for (unsigned i = 0; i < e[2]; ++i) term *= vz;
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const TrivariatePoly& a, const TrivariatePoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(const Exponents& e, const CycRat& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  unsigned degree_;
  Terms terms_;
};

/// True iff p = c*q for some nonzero c; two zero polynomials count as proportional.
inline bool proportional(const TrivariatePoly& p, const TrivariatePoly& q) {
  if (p.degree() != q.degree()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [lead, lead_coeff] = *p.terms().begin();
  CycRat qc = q.coefficient(lead);
  if (qc.is_zero()) return false;
  return p == q * (lead_coeff / qc);
}

// Monomials in descending lexicographic order: "2*x^2 + (1-1w)*x*y - z^2".
inline std::string to_string(const TrivariatePoly& p) {
  if (p.is_zero()) return "0";
  static constexpr char kVars[3] = {'x', 'y', 'z'};
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kVars[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    CycRat coeff = c;
    bool negative = c.is_rational() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.rh()) < 0);
    if (negative) coeff = -c;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    std::string cs = to_string(coeff);
    bool compound = !coeff.is_rational() && sgn(coeff.re()) != 0;
    if (mono.empty()) {
      out += compound ? "(" + cs + ")" : cs;
    } else if (coeff.is_one()) {
      out += mono;
    } else {
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const TrivariatePoly& p) { return os << to_string(p); }

}  // namespace braidrev
