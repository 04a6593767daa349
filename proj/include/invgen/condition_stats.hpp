#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/permutation.hpp"
#include "invgen/rng.hpp"

namespace invgen {

inline bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline bool is_mersenne_prime(std::uint64_t v) {
  // 2^k - 1 and prime
  if (v < 3 || ((v + 1) & v) != 0) return false;
  return is_prime_u64(v);
}

// Sampled frequencies of the two cycle-structure events behind fixed-point-free
// generation heuristics:
//  (a) sigma has exactly one p-cycle for some prime p in the inclusive window
//      [ceil((ln n)^2), floor(n/2)], and no other cycle length divisible by p;
//  (b) sigma has a cycle whose length is a Mersenne prime >= (ln n)^2.
// Logs are natural.
struct ConditionStats {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int window_lo = 0;  // ceil((ln n)^2)
  int window_hi = 0;  // floor(n/2); empty window when lo > hi
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  double prop_a = 0.0;
  double se_a = 0.0;
  double prop_b = 0.0;
  double se_b = 0.0;
};

inline bool satisfies_condition_a(const CycleType& t, int lo, int hi) {
  for (int p = lo; p <= hi; ++p) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
    int count_p = 0;
    bool other_divisible = false;
    for (int part : t.parts()) {
      if (part == p)
        ++count_p;
      else if (part % p == 0)
        other_divisible = true;
    }
    if (count_p == 1 && !other_divisible) return true;
  }
  return false;
}

inline bool satisfies_condition_b(const CycleType& t, double threshold) {
  for (int part : t.parts())
    if (static_cast<double>(part) >= threshold &&
        is_mersenne_prime(static_cast<std::uint64_t>(part)))
      return true;
  return false;
}

inline ConditionStats condition_stats(int n, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (n < 5) throw InputError("condition statistics need degree at least 5");
  if (trials < 1) throw InputError("at least one trial required");
  ConditionStats s;
  s.n = n;
  s.trials = trials;
  s.seed = seed;
  double log2n = std::log(static_cast<double>(n)) * std::log(static_cast<double>(n));
  s.window_lo = static_cast<int>(std::ceil(log2n));
  s.window_hi = n / 2;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = derived_rng(seed, i);
    CycleType t = cycle_type_of(random_permutation(n, rng));
    if (satisfies_condition_a(t, s.window_lo, s.window_hi)) ++s.count_a;
    if (satisfies_condition_b(t, log2n)) ++s.count_b;
  }
  double tr = static_cast<double>(trials);
  s.prop_a = static_cast<double>(s.count_a) / tr;
  s.prop_b = static_cast<double>(s.count_b) / tr;
  s.se_a = std::sqrt(s.prop_a * (1.0 - s.prop_a) / tr);
  s.se_b = std::sqrt(s.prop_b * (1.0 - s.prop_b) / tr);
  return s;
}

}  // namespace invgen
