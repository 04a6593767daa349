#pragma once

#include <cstdint>
#include <random>

namespace invgen {

// All randomness flows through mt19937_64 so a fixed seed reproduces the same
// stream on every platform (the engine's output sequence is pinned by the
// standard; uniform_int_distribution is not, hence bounded() below).
using Rng = std::mt19937_64;

// Uniform draw from {0, ..., m-1} by masked rejection. Deterministic for a
// given engine state, unlike std::uniform_int_distribution.
inline std::uint64_t bounded(Rng& rng, std::uint64_t m) {
  if (m <= 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0};
  std::uint64_t limit = m - 1;
  int bits = 0;
  while (limit >> bits) ++bits;
  mask = (bits == 64) ? mask : ((std::uint64_t{1} << bits) - 1);
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < m) return v;
  }
}

// Trial/worker i of a run seeded s uses engine seed s + i. Running trials in
// any order (or in parallel) reproduces the serial results exactly.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed + index);
}

}  // namespace invgen
