#pragma once

#include <cstdint>
#include <random>

#include "braidrev/cyc.hpp"
#include "braidrev/matrix.hpp"

namespace braidrev {

using Rng = std::mt19937_64;

inline constexpr int kSampleBound = 5;

// Each trial owns a generator derived from (seed, trial index).
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed + trial); }

inline long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// u + v w with u, v uniform in [-bound, bound].
inline CycRat random_zrho(Rng& rng, int bound = kSampleBound) {
  long u = random_int(rng, -bound, bound);
  long v = random_int(rng, -bound, bound);
  return {u, v};
}

inline CycMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = kSampleBound) {
  CycMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_zrho(rng, bound);
  return m;
}

}  // namespace braidrev
