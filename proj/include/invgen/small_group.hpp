#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "invgen/bits.hpp"
#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/permutation.hpp"

namespace invgen {

inline constexpr std::size_t kMulTableCap = 6000;

// A finite permutation group small enough to hold its full multiplication
// table (order capped at kMulTableCap, so the table stays under ~70MB).
// Everything downstream works on element indices; index 0 is the identity.
class MulTableGroup {
 public:
  // closure of a generating set
  MulTableGroup(int degree, const std::vector<Permutation>& gens,
                std::size_t cap = kMulTableCap) {
    degree_ = degree;
    elems_.push_back(Permutation::identity(degree));
    index_.emplace(elems_[0], 0);
    std::vector<int> parent{-1}, via{-1};
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Permutation y = gens[gi] * elems_[i];
        if (index_.count(y)) continue;
        if (elems_.size() >= cap)
          throw SizeError("group order exceeds table cap " + std::to_string(cap));
        index_.emplace(y, static_cast<int>(elems_.size()));
        elems_.push_back(std::move(y));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(gi));
      }
    }
    // generator rows by composition, remaining rows via the BFS tree:
    // elems[i] = gen[via[i]] * elems[parent[i]], so
    // mul(i, j) = mul(genrow(via[i]), mul(parent[i], j))
    std::size_t m = elems_.size();
    mul_.assign(m * m, 0);
    std::vector<int> genidx(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      genidx[gi] = index_.at(gens[gi]);
    for (std::size_t j = 0; j < m; ++j) mul_[j] = static_cast<std::uint16_t>(j);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::size_t row = static_cast<std::size_t>(genidx[gi]) * m;
      for (std::size_t j = 0; j < m; ++j)
        mul_[row + j] =
            static_cast<std::uint16_t>(index_.at(gens[gi] * elems_[j]));
    }
    std::vector<char> done(m, 0);
    done[0] = 1;
    for (int g : genidx) done[g] = 1;
    for (std::size_t i = 1; i < m; ++i) {
      if (done[i]) continue;
      std::size_t grow = static_cast<std::size_t>(genidx[via[i]]) * m;
      std::size_t prow = static_cast<std::size_t>(parent[i]) * m;
      std::size_t row = i * m;
      for (std::size_t j = 0; j < m; ++j) mul_[row + j] = mul_[grow + mul_[prow + j]];
      done[i] = 1;
    }
    finish();
  }

  // full element list supplied directly (must be closed under products)
  MulTableGroup(int degree, std::vector<Permutation> elements, bool)
      : degree_(degree) {
    if (elements.size() > kMulTableCap)
      throw SizeError("group order exceeds table cap");
    std::sort(elements.begin(), elements.end());
    auto id = Permutation::identity(degree);
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == id) {
        std::swap(elements[0], elements[i]);
        break;
      }
    elems_ = std::move(elements);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      index_.emplace(elems_[i], static_cast<int>(i));
    std::size_t m = elems_.size();
    mul_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        mul_[i * m + j] = static_cast<std::uint16_t>(index_.at(elems_[i] * elems_[j]));
    finish();
  }

  std::size_t size() const { return elems_.size(); }
  int degree() const { return degree_; }
  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * elems_.size() + j]; }
  int inv(int i) const { return inv_[i]; }
  const Permutation& perm(int i) const { return elems_[i]; }
  int type_index(int i) const { return type_idx_[i]; }
  int index_of(const Permutation& p) const { return index_.at(p); }

  int element_order(int i) const {
    int o = 1;
    int x = i;
    while (x != 0) {
      x = mul(x, i);
      ++o;
    }
    return o;
  }

  int conj(int t, int x) const {  // t^-1 x t
    return mul(mul(inv(t), x), t);
  }

  // subgroup of this group, stored by element set
  struct Subgroup {
    Bits members;
    std::vector<int> gens;
    std::size_t order = 0;
  };

  Bits closure(const std::vector<int>& gens) const {
    Bits b(size());
    b.set(0);
    std::vector<int> work{0};
    for (std::size_t i = 0; i < work.size(); ++i)
      for (int g : gens) {
        int y = mul(g, work[i]);
        if (!b.test(static_cast<std::size_t>(y))) {
          b.set(static_cast<std::size_t>(y));
          work.push_back(y);
        }
      }
    return b;
  }

  // Every subgroup, discovered by incremental closure: seed with the cyclic
  // subgroups, then repeatedly adjoin one prime-power-order cyclic generator
  // (groups are generated by their prime-power-order elements, and adjoining
  // those cyclics in increasing list order visits a chain of subgroups, which
  // the allowance bookkeeping below exploits to avoid symmetric rework).
  // Dedup is by exact element set.
  std::vector<Subgroup> all_subgroups() const {
    std::vector<Subgroup> subs;
    std::unordered_map<std::uint64_t, std::vector<int>> by_hash;
    auto lookup = [&](const Bits& b) -> int {
      auto it = by_hash.find(b.hash());
      if (it == by_hash.end()) return -1;
      for (int id : it->second)
        if (subs[id].members == b) return id;
      return -1;
    };
    auto insert = [&](Bits b, std::vector<int> gens) -> int {
      int id = static_cast<int>(subs.size());
      by_hash[b.hash()].push_back(id);
      subs.push_back(Subgroup{std::move(b), std::move(gens), 0});
      subs.back().order = subs.back().members.count();
      return id;
    };
    // trivial subgroup
    {
      Bits t(size());
      t.set(0);
      insert(std::move(t), {});
    }
    // cyclic subgroups; keep one generator as representative
    std::vector<int> cyc_rep;        // representative element per cyclic subgroup
    std::vector<char> cyc_pp;        // prime-power order?
    std::vector<int> sub_of_cyc;     // subgroup id
    for (std::size_t g = 1; g < size(); ++g) {
      Bits b = closure({static_cast<int>(g)});
      if (lookup(b) >= 0) continue;
      int id = insert(b, {static_cast<int>(g)});
      sub_of_cyc.push_back(id);
      cyc_rep.push_back(static_cast<int>(g));
      int o = element_order(static_cast<int>(g));
      int p = smallest_prime_factor(o);
      int q = o;
      while (q % p == 0) q /= p;
      cyc_pp.push_back(q == 1);
    }
    int ncyc = static_cast<int>(cyc_rep.size());
    // allowance[id]: extensions of subgroup id by cyclic list positions
    // >= allowance[id] are done or queued. Work items carry [start, end)
    // so ranges never overlap and each extension runs exactly once.
    std::vector<int> allowance(subs.size(), ncyc);
    struct Item {
      int id, start, end;
    };
    std::vector<Item> work;
    auto schedule = [&](int id, int start) {
      if (static_cast<std::size_t>(id) >= allowance.size())
        allowance.resize(subs.size(), ncyc);
      if (start < allowance[id]) {
        work.push_back(Item{id, start, allowance[id]});
        allowance[id] = start;
      }
    };
    for (int c = 0; c < ncyc; ++c)
      if (cyc_pp[c]) schedule(sub_of_cyc[c], c + 1);
    // the trivial group extends by everything
    schedule(0, 0);
    while (!work.empty()) {
      Item it = work.back();
      work.pop_back();
      for (int c = it.start; c < it.end; ++c) {
        if (!cyc_pp[c]) continue;
        int rep = cyc_rep[c];
        if (subs[it.id].members.test(static_cast<std::size_t>(rep))) continue;
        std::vector<int> gens = subs[it.id].gens;
        gens.push_back(rep);
        Bits k = closure(gens);
        int kid = lookup(k);
        if (kid < 0) kid = insert(std::move(k), std::move(gens));
        schedule(kid, c + 1);
      }
    }
    return subs;
  }

  // derived series at the element level
  bool is_solvable_subgroup(const Subgroup& h) const {
    std::vector<int> gens = h.gens;
    std::size_t order = h.order;
    while (order > 1) {
      std::vector<int> dgens = derived_gens(gens);
      Bits d = normal_closure(dgens, gens);
      std::size_t dord = d.count();
      if (dord == order) return false;
      if (dord == 1) return true;
      order = dord;
      gens = std::move(dgens);
    }
    return true;
  }

  std::vector<CycleType> subgroup_cycle_types(const Subgroup& h) const {
    std::set<CycleType> out;
    h.members.for_each([&](std::size_t e) {
      out.insert(cycle_type_of(elems_[e]));
    });
    return std::vector<CycleType>(out.begin(), out.end());
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<int> type_idx_;

  static int smallest_prime_factor(int o) {
    for (int p = 2; p * p <= o; ++p)
      if (o % p == 0) return p;
    return o;
  }

  void finish() {
    std::size_t m = elems_.size();
    inv_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      inv_[i] = static_cast<std::uint16_t>(index_.at(elems_[i].inverse()));
    type_idx_.assign(m, 0);
    const PartitionTable& pt = partition_table(degree_);
    for (std::size_t i = 0; i < m; ++i)
      type_idx_[i] = pt.index(cycle_type_of(elems_[i]));
  }

  std::vector<int> derived_gens(const std::vector<int>& gens) const {
    std::set<int> out;
    for (int a : gens)
      for (int b : gens) out.insert(mul(mul(mul(inv(a), inv(b)), a), b));
    out.erase(0);
    return std::vector<int>(out.begin(), out.end());
  }

  // smallest subgroup containing `seed` and closed under conjugation by
  // the ambient generators `under`
  Bits normal_closure(std::vector<int>& seed, const std::vector<int>& under) const {
    Bits k = closure(seed);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snapshot = seed;
      for (int g : under)
        for (int x : snapshot) {
          int y = conj(g, x);
          if (!k.test(static_cast<std::size_t>(y))) {
            seed.push_back(y);
            k = closure(seed);
            grew = true;
          }
        }
    }
    return k;
  }
};

// Inclusion-maximal cycle-type sets over all solvable subgroups of S_n,
// found by exhaustive subgroup enumeration. Independent of the recursive
// construction; n <= 7 keeps the table cap honest (|S_7| = 5040).
inline std::vector<std::vector<CycleType>> all_solvable_subgroup_ct_sets(int n) {
  if (n < 1) throw InputError("degree must be positive");
  if (n > 7) throw SizeError("exhaustive subgroup enumeration supported for degree <= 7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  MulTableGroup g(n, gens);
  const PartitionTable& pt = partition_table(n);
  auto subs = g.all_subgroups();
  std::vector<Bits> ctsets;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  for (const auto& h : subs) {
    if (!g.is_solvable_subgroup(h)) continue;
    Bits ct(pt.size());
    h.members.for_each([&](std::size_t e) {
      ct.set(static_cast<std::size_t>(g.type_index(static_cast<int>(e))));
    });
    auto& bucket = seen[ct.hash()];
    bool dup = false;
    for (std::size_t i : bucket)
      if (ctsets[i] == ct) {
        dup = true;
        break;
      }
    if (dup) continue;
    bucket.push_back(ctsets.size());
    ctsets.push_back(std::move(ct));
  }
  // thin to inclusion-maximal
  std::vector<std::vector<CycleType>> out;
  for (std::size_t i : maximal_indices(ctsets)) {
    std::vector<CycleType> set;
    ctsets[i].for_each([&](std::size_t t) { set.push_back(pt.type(static_cast<int>(t))); });
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

}  // namespace invgen
