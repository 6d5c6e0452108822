#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidrev/cyc.hpp"
#include "braidrev/matrix.hpp"

namespace braidrev::modular {

/// Arithmetic in F_p for the Mersenne prime p = 2^61 - 1. Since p = 1 mod 3,
/// F_p contains a primitive cube root of unity and Z[w] maps onto it.
class Field {
 public:
  static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + p - b; }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & p);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    return add(lo, hi);
  }
  static std::uint64_t pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return pow(a, p - 2); }

  static std::uint64_t cube_root_of_unity() {
    for (std::uint64_t g = 2;; ++g) {
      std::uint64_t r = pow(g, (p - 1) / 3);
      if (r != 1) return r;
    }
  }

  // Image of a rational, or nothing when p divides the denominator.
  static std::optional<std::uint64_t> reduce(const Rational& q) {
    const Integer pz(static_cast<unsigned long>(p));
    Integer den = q.get_den() % pz;
    if (den == 0) return std::nullopt;
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    return mul(num.get_ui(), inv(den.get_ui()));
  }

  // Image of re + rh*w under w -> cube_root_of_unity().
  static std::optional<std::uint64_t> reduce(const CycRat& u) {
    static const std::uint64_t w = cube_root_of_unity();
    auto re = reduce(u.re());
    auto rh = reduce(u.rh());
    if (!re || !rh) return std::nullopt;
    return add(*re, mul(*rh, w));
  }
};

using Matrix = std::vector<std::uint64_t>;  // row-major n x n

inline std::optional<Matrix> reduce(const CycMatrix& m) {
  Matrix out;
  out.reserve(m.entries().size());
  for (const auto& c : m.entries()) {
    auto v = Field::reduce(c);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

/// Rank over F_p of the span of {I, X1, X2} closed under left multiplication,
/// computed exactly like the Q(w) closure. Nothing is returned when an entry
/// has a denominator divisible by p.
inline std::optional<std::size_t> burnside_dimension(const CycMatrix& X1, const CycMatrix& X2) {
  const std::size_t n = X1.rows();
  auto g1 = reduce(X1);
  auto g2 = reduce(X2);
  if (!g1 || !g2) return std::nullopt;

  std::vector<Matrix> rows;
  std::vector<std::size_t> pivots;
  auto insert = [&](Matrix v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (rows[r][j]) v[j] = Field::sub(v[j], Field::mul(f, rows[r][j]));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    const std::uint64_t inv = Field::inv(v[p]);
    for (auto& c : v) c = Field::mul(c, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };
  auto multiply = [n](const Matrix& l, const Matrix& r) {
    Matrix out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t lik = l[i * n + k];
        if (!lik) continue;
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = Field::add(out[i * n + j], Field::mul(lik, r[k * n + j]));
      }
    return out;
  };

  Matrix identity(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) identity[i * n + i] = 1;
  insert(identity);
  std::vector<Matrix> frontier{identity};
  for (std::size_t round = 0; round < n * n && !frontier.empty() && rows.size() < n * n; ++round) {
    std::vector<Matrix> next;
    for (const auto& m : frontier) {
      for (const Matrix* g : {&*g1, &*g2}) {
        Matrix product = multiply(*g, m);
        if (insert(product)) next.push_back(std::move(product));
        if (rows.size() == n * n) return rows.size();
      }
    }
    frontier = std::move(next);
  }
  return rows.size();
}

}  // namespace braidrev::modular
