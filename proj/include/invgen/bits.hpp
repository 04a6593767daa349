#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace invgen {

// Fixed-universe bitset with the few operations the subgroup and cycle-type
// machinery needs (subset tests, hashing). Universe size set at construction.
struct Bits {
  std::vector<std::uint64_t> w;
  std::size_t n = 0;

  Bits() = default;
  explicit Bits(std::size_t universe) : w((universe + 63) / 64, 0), n(universe) {}

  void set(std::size_t i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w[i >> 6] >> (i & 63)) & 1u;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }

  bool none() const {
    for (std::uint64_t x : w)
      if (x) return false;
    return true;
  }

  void operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }

  void operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }

  bool operator==(const Bits& o) const { return n == o.n && w == o.w; }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int b = __builtin_ctzll(x);
        fn(i * 64 + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }
};

// Indices of the inclusion-maximal sets. Callers must dedup first:
// entries are assumed pairwise distinct, so subset means proper subset.
inline std::vector<std::size_t> maximal_indices(const std::vector<Bits>& sets) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (j != i && sets[i].subset_of(sets[j])) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace invgen
