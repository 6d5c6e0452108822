#pragma once

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "braidrev/error.hpp"
#include "braidrev/random.hpp"

namespace braidrev {

enum class Generator : int { sigma1 = 1, sigma2 = 2 };

struct Syllable {
  Generator generator;
  long exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in sigma1, sigma2 kept freely reduced: adjacent syllables use
/// different generators and no exponent is zero.
class BraidWord {
 public:
  BraidWord() = default;

  static BraidWord from_syllables(const std::vector<Syllable>& syllables) {
    BraidWord w;
    for (const auto& s : syllables) w.append(s.generator, s.exponent);
    return w;
  }

  void append(Generator g, long exponent) {
    if (exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == g) {
      syllables_.back().exponent += exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
      return;
    }
    syllables_.push_back({g, exponent});
  }

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  long exponent_sum() const {
    long s = 0;
    for (const auto& syl : syllables_) s += syl.exponent;
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

inline std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.generator == Generator::sigma1 ? "s1" : "s2";
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) { return os << to_string(w); }

/// Parses `term+` with `term := ("s1"|"s2") ("^" integer)?`, whitespace
/// allowed between terms. Blank input is the empty word.
inline BraidWord parse_braid(std::string_view text) {
  BraidWord w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    const std::size_t term_start = i;
    if (text[i] != 's') throw ParseError("expected 's1' or 's2'", i);
    ++i;
    if (i >= text.size() || (text[i] != '1' && text[i] != '2')) throw ParseError("expected generator index 1 or 2", i);
    const Generator g = text[i] == '1' ? Generator::sigma1 : Generator::sigma2;
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      const std::size_t digits_start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits_start) throw ParseError("expected exponent digits", i);
      if (i - digits_start > 9) throw ParseError("exponent too large", digits_start);
      exponent = std::stol(std::string(text.substr(digits_start, i - digits_start)));
      if (negative) exponent = -exponent;
      if (exponent == 0) throw ParseError("zero exponent", term_start);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != 's')
      throw ParseError("unexpected character", i);
    w.append(g, exponent);
    skip_space();
  }
  return w;
}

inline BraidWord reverse_braid(const BraidWord& w) {
  BraidWord r;
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) r.append(it->generator, it->exponent);
  return r;
}

/// The 3-braid whose closure is the knot 8_17.
inline BraidWord knot_8_17_braid() { return parse_braid("s1^-2 s2 s1^-1 s2 s1^-1 s2^2"); }

/// Random freely reduced word with `syllables` syllables, exponents in
/// [-max_exponent, max_exponent] \ {0}.
inline BraidWord random_word(Rng& rng, std::size_t syllables, long max_exponent = 3) {
  BraidWord w;
  auto g = random_int(rng, 0, 1) == 0 ? Generator::sigma1 : Generator::sigma2;
  for (std::size_t i = 0; i < syllables; ++i) {
    long e = 0;
    while (e == 0) e = random_int(rng, -max_exponent, max_exponent);
    w.append(g, e);
    g = g == Generator::sigma1 ? Generator::sigma2 : Generator::sigma1;
  }
  return w;
}

}  // namespace braidrev
