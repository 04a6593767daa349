#pragma once

// Coverage queries against the atlas and the exact pair probability.
//
// A multiset of cycle types is "covered" when one solvable subgroup of S_n
// has elements of every one of those types, i.e. some atlas row contains
// them all. Two uniform random elements whose types form an uncovered pair
// witness that no solvable subgroup meets both conjugacy classes, which is
// the invariable-generation event the exact probability below measures.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invgen/atlas.hpp"
#include "invgen/bits.hpp"
#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"
#include "invgen/permutation.hpp"
#include "invgen/rng.hpp"

namespace invgen {

enum class GroupKind { symmetric, alternating };

inline constexpr int kSampleDrawCap = 10000;

class CoverageTable {
 public:
  CoverageTable(const Atlas& atlas, int n)
      : n_(n), pt_(&partition_table(n)), nrows_(atlas.rows(n).size()) {
    const auto& rows = atlas.rows(n);
    rows_.reserve(nrows_);
    for (const AtlasRow& r : rows) rows_.push_back(r.type_bits);
    type_rows_.assign(pt_->size(), Bits(nrows_));
    for (std::size_t ri = 0; ri < nrows_; ++ri)
      rows_[ri].for_each([&](std::size_t t) { type_rows_[t].set(ri); });
  }

  int degree() const { return n_; }
  const PartitionTable& types() const { return *pt_; }
  std::size_t row_count() const { return nrows_; }

  // rows whose type set contains the type with this index
  const Bits& rows_containing(int type_index) const {
    return type_rows_[static_cast<std::size_t>(type_index)];
  }

  // union of the type sets of all rows containing the given type
  Bits reach_of(int type_index) const {
    Bits u(pt_->size());
    type_rows_[static_cast<std::size_t>(type_index)].for_each(
        [&](std::size_t ri) { u |= rows_[ri]; });
    return u;
  }

  bool is_covered(const std::vector<CycleType>& observed) const {
    Bits alive = all_rows();
    for (const CycleType& t : observed) {
      alive &= type_rows_[static_cast<std::size_t>(pt_->index(t))];
      if (alive.none()) return false;
    }
    return true;
  }

  Bits all_rows() const {
    Bits b(nrows_);
    for (std::size_t i = 0; i < nrows_; ++i) b.set(i);
    return b;
  }

 private:
  int n_;
  const PartitionTable* pt_;
  std::size_t nrows_;
  std::vector<Bits> rows_;        // type sets, over partition indices
  std::vector<Bits> type_rows_;   // per type, the rows containing it
};

// Running intersection of the rows compatible with every type seen so far.
// Once empty, no solvable subgroup meets all the observed classes.
class CoverState {
 public:
  explicit CoverState(const CoverageTable& table)
      : table_(&table), alive_(table.all_rows()) {}

  bool add(int type_index) {
    alive_ &= table_->rows_containing(type_index);
    return !alive_.none();
  }

  bool add(const CycleType& t) { return add(table_->types().index(t)); }

  bool covered() const { return !alive_.none(); }
  const Bits& alive_rows() const { return alive_; }

 private:
  const CoverageTable* table_;
  Bits alive_;
};

// Exact probability that two independent uniform elements of S_n (or A_n)
// have types no single solvable subgroup realizes simultaneously.
inline BigRational exact_p2(const CoverageTable& table, GroupKind kind) {
  const PartitionTable& pt = table.types();
  int n = table.degree();
  std::size_t m = pt.size();
  std::vector<BigInt> weight(m);     // class size, zeroed for odd types under A_n
  for (std::size_t i = 0; i < m; ++i) {
    const CycleType& t = pt.type(static_cast<int>(i));
    if (kind == GroupKind::alternating && t.parity() != 0) continue;
    weight[i] = class_size(t);
  }
  BigInt covered = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (weight[i] == 0) continue;
    Bits reach = table.reach_of(static_cast<int>(i));
    BigInt inner = 0;
    reach.for_each([&](std::size_t j) { inner += weight[j]; });
    covered += weight[i] * inner;
  }
  BigInt order = factorial(static_cast<unsigned>(n));
  if (kind == GroupKind::alternating && n >= 2) order /= 2;
  return BigRational(1) - BigRational(covered, order * order);
}

inline BigRational exact_p2(const Atlas& atlas, int n, GroupKind kind = GroupKind::symmetric) {
  return exact_p2(CoverageTable(atlas, n), kind);
}

// One experiment: draw uniform random elements until the accumulated types
// are uncovered; the count of draws is the sample. Degrees <= 4 never
// terminate (all of S_4 is solvable), hence the DomainError.
inline int sample_N(const CoverageTable& table, Rng& rng,
                    GroupKind kind = GroupKind::symmetric) {
  int n = table.degree();
  if (n <= 4)
    throw DomainError("every subgroup is solvable at degree " + std::to_string(n) +
                      "; the draw count is infinite");
  CoverState state(table);
  const PartitionTable& pt = table.types();
  for (int draws = 1; draws <= kSampleDrawCap; ++draws) {
    Permutation p = random_permutation(n, rng);
    if (kind == GroupKind::alternating)
      while (cycle_type_of(p).parity() != 0) p = random_permutation(n, rng);
    if (!state.add(pt.index(cycle_type_of(p)))) return draws;
  }
  throw SizeError("no uncovered multiset after " + std::to_string(kSampleDrawCap) +
                  " draws");
}

struct TrialStats {
  int trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::map<int, int> histogram;  // draw count -> occurrences
};

// Monte Carlo estimate of E[N]. Each trial runs on its own generator derived
// from (seed, trial index), so results do not depend on scheduling.
inline TrialStats estimate_mean_N(const CoverageTable& table, int trials,
                                  std::uint64_t seed,
                                  GroupKind kind = GroupKind::symmetric) {
  if (trials < 1) throw InputError("trial count must be positive");
  TrialStats st;
  st.trials = trials;
  st.seed = seed;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < trials; ++i) {
    Rng rng = derived_rng(seed, static_cast<std::uint64_t>(i));
    int n = sample_N(table, rng, kind);
    sum += n;
    sumsq += static_cast<double>(n) * n;
    ++st.histogram[n];
  }
  st.mean = sum / trials;
  double var = (sumsq - sum * sum / trials) / (trials > 1 ? trials - 1 : 1);
  if (var < 0) var = 0;
  st.std_error = std::sqrt(var / trials);
  return st;
}

inline TrialStats estimate_mean_N(const Atlas& atlas, int n, int trials,
                                  std::uint64_t seed,
                                  GroupKind kind = GroupKind::symmetric) {
  return estimate_mean_N(CoverageTable(atlas, n), trials, seed, kind);
}

}  // namespace invgen
