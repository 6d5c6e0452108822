#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "braidrev/error.hpp"

namespace braidrev {

// GMP keeps results of arithmetic canonical (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_canonical(const Rational& q) {
  Rational copy = q;
  copy.canonicalize();
  return copy.get_num() == q.get_num() && copy.get_den() == q.get_den();
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

// `[-]digits[/digits]`, nothing else. Offsets in errors are relative to `text`.
inline Rational parse_rational(std::string_view text, std::size_t base_offset = 0) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", base_offset + pos);
    return std::string(text.substr(start, pos - start));
  };
  Integer num(digits(i), 10);
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = Integer(digits(i), 10);
    if (den == 0) throw ParseError("zero denominator", base_offset + i - 1);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", base_offset + i);
  if (negative) num = -num;
  return make_rational(num, den);
}

}  // namespace braidrev
