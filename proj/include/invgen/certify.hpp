#pragma once

// Nonsolvability certificates for Galois groups over Q. Reduce f mod usable
// primes, read off the factor-degree pattern (the cycle type of a Frobenius
// element by Dedekind's criterion), and accumulate patterns until no maximal
// solvable cycle-type family contains them all. A completed certificate is an
// unconditional proof; running out of budget proves nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "invgen/atlas.hpp"
#include "invgen/condition_stats.hpp"
#include "invgen/coverage.hpp"
#include "invgen/errors.hpp"
#include "invgen/poly_int.hpp"
#include "invgen/poly_mod.hpp"
#include "invgen/rng.hpp"

namespace invgen {

inline constexpr std::uint64_t kSieveBoundCap = 100000000;

// p is fit for a Frobenius reading: keeps the degree and the roots stay
// distinct mod p
inline bool usable_prime(const IntPolynomial& f, std::uint64_t p) {
  if (f.degree() < 1) throw InputError("usability needs degree >= 1");
  if (f.lead() % BigInt(p) == 0) return false;
  return is_squarefree_mod(ModPolynomial::reduce(f, p));
}

struct PrimeReduction {
  std::uint64_t p;
  CycleType pattern;
};

struct Certificate {
  std::string poly;
  int degree = 0;
  bool nonsolvable = false;  // false means inconclusive
  std::vector<PrimeReduction> primes;
  int budget = 0;
  std::string note;  // nonempty only for early exits that examined no primes
  int atlas_max_degree = 0;
  std::size_t atlas_rows = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json out;
    out["poly"] = poly;
    out["degree"] = degree;
    out["primes"] = nlohmann::ordered_json::array();
    for (const PrimeReduction& r : primes) {
      nlohmann::ordered_json row;
      row["p"] = r.p;
      row["pattern"] = r.pattern.parts();
      out["primes"].push_back(std::move(row));
    }
    out["conclusion"] = nonsolvable ? "nonsolvable" : "inconclusive";
    if (!note.empty()) out["note"] = note;
    out["atlas_meta"] = {{"max_degree", atlas_max_degree}, {"rows", atlas_rows}};
    return out;
  }

  std::string transcript() const {
    std::string out = "Galois group of " + poly + " over Q, degree " +
                      std::to_string(degree) + "\n";
    for (const PrimeReduction& r : primes)
      out += "  mod " + std::to_string(r.p) + ": factor degrees " + r.pattern.str() +
             " (cycle type of a Frobenius element, by Dedekind's criterion)\n";
    if (nonsolvable) {
      out += "no solvable subgroup of S_" + std::to_string(degree) +
             " contains elements of all " + std::to_string(primes.size()) +
             " observed cycle types; the Galois group is nonsolvable\n";
    } else if (!note.empty()) {
      out += "inconclusive: " + note + "\n";
    } else {
      out += "inconclusive: all observed cycle types fit inside one solvable "
             "family; budget of " +
             std::to_string(budget) + " usable primes exhausted\n";
    }
    return out;
  }
};

namespace certify_detail {

// deterministic by default; a seed switches to a reproducible random prime
// sequence (each prime visited once)
class PrimeSequence {
 public:
  explicit PrimeSequence(std::optional<std::uint64_t> seed) : seed_(seed) {
    if (seed_) rng_ = derived_rng(*seed_, 0);
  }

  std::uint64_t next() {
    if (!seed_) {
      while (!is_prime_u64(++cursor_)) {
      }
      return cursor_;
    }
    for (;;) {
      std::uint64_t p = 2 + bounded(rng_, kModPrimeCap - 2);
      if (is_prime_u64(p) && seen_.insert(p).second) return p;
    }
  }

 private:
  std::optional<std::uint64_t> seed_;
  Rng rng_;
  std::uint64_t cursor_ = 1;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace certify_detail

inline Certificate certify_nonsolvable(const IntPolynomial& f, int budget,
                                       const Atlas& atlas,
                                       std::optional<std::uint64_t> seed = {}) {
  if (f.degree() < 1) throw InputError("certification needs degree >= 1");
  if (budget < 1) throw InputError("prime budget must be positive");
  if (!is_separable(f)) throw InputError("polynomial has repeated roots");
  Certificate cert;
  cert.poly = f.str();
  cert.degree = f.degree();
  cert.budget = budget;
  cert.atlas_max_degree = atlas.max_degree();
  int n = f.degree();
  if (n <= 4) {
    cert.note = "every subgroup of S_" + std::to_string(n) +
                " is solvable; no certificate can exist at degree " + std::to_string(n);
    cert.atlas_rows = n <= atlas.max_degree() ? atlas.rows(n).size() : 0;
    return cert;
  }
  CoverageTable table(atlas, n);  // throws past the atlas ceiling
  cert.atlas_rows = table.row_count();
  CoverState state(table);
  certify_detail::PrimeSequence seq(seed);
  for (int used = 0; used < budget;) {
    std::uint64_t p = seq.next();
    if (!usable_prime(f, p)) continue;
    ++used;
    CycleType pattern = ddf_pattern(ModPolynomial::reduce(f, p));
    cert.primes.push_back({p, pattern});
    if (!state.add(pattern)) {
      cert.nonsolvable = true;
      return cert;
    }
  }
  return cert;
}

struct FrequencyEntry {
  CycleType pattern;
  std::uint64_t count = 0;
  double density = 0.0;
};

struct FrequencyReport {
  std::uint64_t bound = 0;
  std::uint64_t usable = 0;
  std::uint64_t skipped = 0;
  std::vector<FrequencyEntry> entries;  // canonical type order
};

// empirical Frobenius statistics: pattern frequencies over all usable primes
// up to the bound (Chebotarev in action, not a proof of anything)
inline FrequencyReport frobenius_frequencies(const IntPolynomial& f,
                                             std::uint64_t prime_bound) {
  if (f.degree() < 1) throw InputError("frequencies need degree >= 1");
  if (prime_bound > kSieveBoundCap) throw SizeError("prime bound too large");
  if (!is_separable(f)) throw InputError("polynomial has repeated roots");
  std::vector<bool> composite(prime_bound + 1, false);
  const PartitionTable& pt = partition_table(f.degree());
  std::vector<std::uint64_t> counts(pt.size(), 0);
  FrequencyReport rep;
  rep.bound = prime_bound;
  for (std::uint64_t p = 2; p <= prime_bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= prime_bound; q += p) composite[q] = true;
    if (!usable_prime(f, p)) {
      ++rep.skipped;
      continue;
    }
    ++rep.usable;
    ++counts[static_cast<std::size_t>(pt.index(ddf_pattern(ModPolynomial::reduce(f, p))))];
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    FrequencyEntry e;
    e.pattern = pt.type(static_cast<int>(i));
    e.count = counts[i];
    e.density = rep.usable ? static_cast<double>(counts[i]) / static_cast<double>(rep.usable) : 0.0;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace invgen
