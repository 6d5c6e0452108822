#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidrev/quiver.hpp"

namespace braidrev {

enum class Verdict { fixed, detecting, not_simple_component };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::fixed: return "fixed";
    case Verdict::detecting: return "detecting";
    case Verdict::not_simple_component: return "not_simple_component";
  }
  return "?";
}

struct ComponentReport {
  DimVector dims;  // normalized
  std::size_t n = 0;
  bool simple = false;
  std::optional<long> component_dim;  // only for simple dimension vectors
  Verdict verdict = Verdict::not_simple_component;
};

/// a >= b, and (x,y,z) rotated cyclically so that the first maximal entry
/// lands in x. Swapping a,b and rotating (x,y,z) come from twisting by sixth
/// roots of unity; the mirror (x,z,y) is a different component and is never
/// produced here.
inline DimVector normalize(DimVector d) {
  if (d.a < d.b) std::swap(d.a, d.b);
  const std::size_t top = std::max({d.x, d.y, d.z});
  while (d.x != top) d = {d.a, d.b, d.y, d.z, d.x};
  return d;
}

inline DimVector mirror(const DimVector& d) { return {d.a, d.b, d.x, d.z, d.y}; }

/// 2 + 2ab - (x^2 + y^2 + z^2): the stratum dimension 1 + 2ab - (x^2+y^2+z^2)
/// plus one for the central character.
inline long component_dimension(const DimVector& d) {
  if (!is_simple_dimvector(d)) throw std::invalid_argument(to_string(d) + " is not a simple dimension vector");
  auto s = [](std::size_t v) { return static_cast<long>(v); };
  return 2 + 2 * s(d.a) * s(d.b) - (s(d.x) * s(d.x) + s(d.y) * s(d.y) + s(d.z) * s(d.z));
}

/// Membership in the explicit list of fixed components (after normalizing).
inline bool in_fixed_list(const DimVector& raw) {
  const DimVector d = normalize(raw);
  if (d == DimVector{1, 0, 1, 0, 0} || d == DimVector{4, 2, 2, 2, 2}) return true;
  const std::size_t k = d.b;
  if (k == 0) return false;
  if (d.a == k) return d == DimVector{k, k, k, k - 1, 1} || d == DimVector{k, k, k, 1, k - 1};
  if (d.a == k + 1) return d == DimVector{k + 1, k, k, k, 1} || d == DimVector{k + 1, k, k, 1, k};
  return false;
}

/// Independent rule: a simple vector detects reversion iff it dominates
/// (3,3;2,2,2) up to symmetry, i.e. min(a,b) >= 3 and min(x,y,z) >= 2.
inline bool detecting_by_rule(const DimVector& d) {
  return std::min(d.a, d.b) >= 3 && std::min({d.x, d.y, d.z}) >= 2;
}

inline ComponentReport classify_component(const DimVector& raw) {
  ComponentReport r;
  r.dims = normalize(raw);
  r.n = r.dims.n();
  r.simple = is_simple_dimvector(r.dims);
  if (!r.simple) return r;
  r.component_dim = component_dimension(r.dims);
  r.verdict = in_fixed_list(r.dims) ? Verdict::fixed : Verdict::detecting;
  return r;
}

/// Every simple (a,b;x,y,z) with a+b = n, a >= b and x = max(x,y,z), in
/// lexicographic order. Both mirror forms appear when they differ.
inline std::vector<ComponentReport> enumerate_components(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::vector<ComponentReport> out;
  for (std::size_t b = 0; 2 * b <= n; ++b) {
    const std::size_t a = n - b;
    for (std::size_t x = 0; x <= n; ++x)
      for (std::size_t y = 0; x + y <= n; ++y) {
        const DimVector d{a, b, x, y, n - x - y};
        if (x < std::max(d.y, d.z) || !is_simple_dimvector(d)) continue;
        ComponentReport r;
        r.dims = d;
        r.n = n;
        r.simple = true;
        r.component_dim = component_dimension(d);
        r.verdict = in_fixed_list(d) ? Verdict::fixed : Verdict::detecting;
        out.push_back(r);
      }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.dims < r.dims; });
  return out;
}

}  // namespace braidrev
