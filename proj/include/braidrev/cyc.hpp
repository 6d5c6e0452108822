#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "braidrev/error.hpp"
#include "braidrev/rational.hpp"

namespace braidrev {

/// An element re + rh*w of Q(w), where w is a primitive cube root of unity.
///
/// The basis {1, w} is used with w^2 = -1 - w, so every element has exactly
/// one representation and equality is componentwise.
class CycRat {
 public:
  CycRat() = default;
  CycRat(Rational re, Rational rh = 0) : re_(std::move(re)), rh_(std::move(rh)) {}
  CycRat(int v) : re_(v) {}
  CycRat(long v) : re_(v) {}

  static CycRat rho() { return {0, 1}; }
  static CycRat rho_squared() { return {-1, -1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& rh() const noexcept { return rh_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(rh_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(rh_) == 0; }
  bool is_rational() const { return sgn(rh_) == 0; }

  // Galois conjugate w -> w^2: (a + b w) -> (a - b) - b w.
  CycRat conj() const { return {re_ - rh_, -rh_}; }

  // Field norm a^2 - ab + b^2; positive for nonzero elements.
  Rational norm() const { return re_ * re_ - re_ * rh_ + rh_ * rh_; }

  CycRat inv() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    CycRat c = conj();
    return {c.re_ / n, c.rh_ / n};
  }

  CycRat operator-() const { return {-re_, -rh_}; }

  CycRat& operator+=(const CycRat& o) {
    re_ += o.re_;
    rh_ += o.rh_;
    return *this;
  }
  CycRat& operator-=(const CycRat& o) {
    re_ -= o.re_;
    rh_ -= o.rh_;
    return *this;
  }
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
  CycRat& operator*=(const CycRat& o) {
    if (o.is_rational()) {
      re_ *= o.re_;
      rh_ *= o.re_;
      return *this;
    }
    Rational bd = rh_ * o.rh_;
    Rational re = re_ * o.re_ - bd;
    Rational rh = re_ * o.rh_ + rh_ * o.re_ - bd;
    re_ = std::move(re);
    rh_ = std::move(rh);
    return *this;
  }
  CycRat& operator/=(const CycRat& o) { return *this *= o.inv(); }

  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(CycRat a, const CycRat& b) { return a *= b; }
  friend CycRat operator/(CycRat a, const CycRat& b) { return a /= b; }

  friend bool operator==(const CycRat& a, const CycRat& b) { return a.re_ == b.re_ && a.rh_ == b.rh_; }
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational rh_{0};
};

/// Text form: `<rat>`, `<rat>w`, `<rat>+<rat>w` or `<rat>-<rat>w`.
inline std::string to_string(const CycRat& u) {
  if (u.is_rational()) return to_string(u.re());
  if (sgn(u.re()) == 0) return to_string(u.rh()) + "w";
  std::string out = to_string(u.re());
  if (sgn(u.rh()) > 0) out += '+';
  return out + to_string(u.rh()) + "w";
}

inline std::ostream& operator<<(std::ostream& os, const CycRat& u) { return os << to_string(u); }

/// Inverse of to_string. A bare `w` / `-w` is accepted as 1w / -1w.
inline CycRat parse_cyc(std::string_view text) {
  if (text.empty()) throw ParseError("empty cyclotomic literal", 0);
  if (text.back() != 'w') return CycRat(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  auto coefficient = [](std::string_view s, std::size_t offset) -> Rational {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s, offset);
  };
  if (split == std::string_view::npos) return CycRat(0, coefficient(body, 0));
  return CycRat(parse_rational(body.substr(0, split)), coefficient(body.substr(split), split));
}

}  // namespace braidrev
