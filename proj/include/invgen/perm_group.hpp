#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"
#include "invgen/permutation.hpp"

namespace invgen {

inline constexpr long long kElementEnumerationCap = 10'000'000;

// Permutation group given by generators, with a stabilizer chain built lazily
// on first query. The base is the fixed sequence 0, 1, ..., n-1 (no base
// selection heuristics), so chains are reproducible; levels whose orbit is
// trivial contribute factor 1 to the order.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> gens)
      : degree_(degree), gens_(std::move(gens)) {
    if (degree < 1) throw InputError("group degree must be at least 1");
    for (const auto& g : gens_)
      if (g.degree() != degree)
        throw InputError("generator degree mismatch: expected " +
                         std::to_string(degree) + ", got " +
                         std::to_string(g.degree()));
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  BigInt order() const {
    build();
    BigInt r = 1;
    for (const auto& lv : levels_) r *= static_cast<int>(lv.orbit.size());
    return r;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    build();
    return strip(g, 0).is_identity();
  }

  bool is_trivial() const { return order() == 1; }

  // visit every element exactly once; throws SizeError past `cap`
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        long long cap = kElementEnumerationCap) const {
    build();
    if (order() > cap)
      throw SizeError("element enumeration capped at " + std::to_string(cap) +
                      " (group order " + order().str() + ")");
    dfs_elements(0, Permutation::identity(degree_), fn);
  }

  // sorted set of cycle types over all elements
  std::vector<CycleType> cycle_type_set(
      long long cap = kElementEnumerationCap) const {
    std::set<CycleType> acc;
    for_each_element([&](const Permutation& p) { acc.insert(cycle_type_of(p)); },
                     cap);
    return std::vector<CycleType>(acc.begin(), acc.end());
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_, 0);
    for (int s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      std::vector<int> orb{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (const auto& g : gens_) {
          int y = g(orb[i]);
          if (!seen[y]) {
            seen[y] = 1;
            orb.push_back(y);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const { return orbits().size() == 1; }

  // commutator subgroup [G, G] as a generated group (normal closure of the
  // generator commutators)
  PermGroup derived_subgroup() const {
    std::vector<Permutation> kgens;
    PermGroup k(degree_, {});
    auto add_if_new = [&](const Permutation& p) {
      if (p.is_identity() || k.contains(p)) return false;
      kgens.push_back(p);
      k = PermGroup(degree_, kgens);
      return true;
    };
    for (const auto& a : gens_)
      for (const auto& b : gens_)
        add_if_new(a.inverse() * b.inverse() * a * b);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Permutation> snapshot = kgens;
      for (const auto& g : gens_)
        for (const auto& x : snapshot)
          if (add_if_new(g.inverse() * x * g)) grew = true;
    }
    return k;
  }

  // derived series reaches the trivial group
  bool is_solvable() const {
    PermGroup cur = *this;
    BigInt ord = cur.order();
    while (ord != 1) {
      PermGroup d = cur.derived_subgroup();
      BigInt dord = d.order();
      if (dord == ord) return false;  // perfect and nontrivial
      cur = std::move(d);
      ord = dord;
    }
    return true;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> stored;  // strong gens first moving this base point
    std::vector<int> orbit;           // discovery order, orbit[0] == base
    std::vector<int> pos;             // point -> index+1 in orbit, 0 if absent
    std::vector<Permutation> trans;   // point -> u with u(base) == point
  };

  int degree_;
  std::vector<Permutation> gens_;
  mutable bool built_ = false;
  mutable std::vector<Level> levels_;

  // gens of the stabilizer of base points < l: everything stored at >= l
  std::vector<Permutation> effective_gens(int l) const {
    std::vector<Permutation> out;
    for (int j = l; j < degree_; ++j)
      for (const auto& g : levels_[j].stored) out.push_back(g);
    return out;
  }

  // BFS that keeps previously assigned coset representatives (strips done
  // earlier must stay valid, so transversals only ever extend)
  void extend_orbit(int l) const {
    Level& lv = levels_[l];
    auto gens = effective_gens(l);
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      int x = lv.orbit[i];
      for (const auto& g : gens) {
        int y = g(x);
        if (!lv.pos[y]) {
          lv.pos[y] = static_cast<int>(lv.orbit.size()) + 1;
          lv.orbit.push_back(y);
          lv.trans[y] = g * lv.trans[x];
        }
      }
    }
  }

  Permutation strip(Permutation h, int from) const {
    for (int l = from; l < degree_; ++l) {
      int x = h(l);
      if (x == l) continue;
      const Level& lv = levels_[l];
      if (!lv.pos[x]) return h;
      h = lv.trans[x].inverse() * h;
    }
    return h;
  }

  static int first_moved(const Permutation& p) {
    for (int i = 0; i < p.degree(); ++i)
      if (p(i) != i) return i;
    return p.degree();
  }

  // Verify level l against its current generators. On the first Schreier
  // generator whose strip fails, store the residue at its level m (> l) and
  // report m; a full pass reports -1. A stored residue moves base point m to
  // a point outside orbit m, so every store strictly grows some orbit once
  // level m is rescanned; that bounds the whole construction by n^2 stores.
  int scan_level(int l) const {
    extend_orbit(l);
    Level& lv = levels_[l];
    auto gens = effective_gens(l);
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      int x = lv.orbit[i];
      for (const auto& g : gens) {
        int y = g(x);
        Permutation sg = lv.trans[y].inverse() * (g * lv.trans[x]);
        Permutation r = strip(std::move(sg), l + 1);
        if (r.is_identity()) continue;
        int m = first_moved(r);  // >= l + 1: sg fixes base points <= l
        levels_[m].stored.push_back(std::move(r));
        return m;
      }
    }
    return -1;
  }

  void build() const {
    if (built_) return;
    levels_.assign(degree_, Level{});
    for (int i = 0; i < degree_; ++i) {
      Level& lv = levels_[i];
      lv.base = i;
      lv.pos.assign(degree_, 0);
      lv.trans.assign(degree_, Permutation());
      lv.orbit = {i};
      lv.pos[i] = 1;
      lv.trans[i] = Permutation::identity(degree_);
    }
    for (const auto& g : gens_) {
      if (g.is_identity()) continue;
      levels_[first_moved(g)].stored.push_back(g);
    }
    // levels above the cursor stay verified: a store at level m only touches
    // stabilizer generator sets of levels <= m, so the cursor jumps to m
    int l = degree_ - 1;
    while (l >= 0) {
      int m = scan_level(l);
      if (m < 0)
        --l;
      else
        l = m;
    }
    built_ = true;
  }

  void dfs_elements(int l, const Permutation& prefix,
                    const std::function<void(const Permutation&)>& fn) const {
    if (l == degree_) {
      fn(prefix);
      return;
    }
    const Level& lv = levels_[l];
    if (lv.orbit.size() == 1) {
      dfs_elements(l + 1, prefix, fn);
      return;
    }
    for (int x : lv.orbit) dfs_elements(l + 1, prefix * lv.trans[x], fn);
  }
};

inline PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InputError("need at least one generator (or a degree)");
  return PermGroup(gens.front().degree(), gens);
}

// Result of a minimal-block-system search on a transitive group.
struct BlockSystem {
  enum class Kind { blocks, primitive, intransitive };
  Kind kind = Kind::primitive;
  // equal-size blocks, each sorted, ordered lexicographically; empty unless
  // kind == blocks
  std::vector<std::vector<int>> blocks;
};

namespace detail {

// finest G-congruence identifying alpha and beta (union-find closure)
inline std::vector<int> finest_congruence(const std::vector<Permutation>& gens,
                                          int n, int alpha, int beta) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  auto merge = [&](int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    parent[rb] = ra;
    queue.emplace_back(rb, ra);
  };
  merge(alpha, beta);
  while (!queue.empty()) {
    auto [s, r] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) merge(g(s), g(r));
  }
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = find(i);
  return cls;
}

}  // namespace detail

// Smallest nontrivial block system of a transitive group; among systems of
// minimal block size the lexicographically least one is returned. Reports
// primitive / intransitive otherwise.
inline BlockSystem minimal_blocks(const PermGroup& g) {
  BlockSystem out;
  if (!g.is_transitive()) {
    out.kind = BlockSystem::Kind::intransitive;
    return out;
  }
  int n = g.degree();
  if (n == 1) {
    out.kind = BlockSystem::Kind::primitive;
    return out;
  }
  std::set<std::vector<std::vector<int>>> candidates;
  for (int beta = 1; beta < n; ++beta) {
    auto cls = detail::finest_congruence(g.generators(), n, 0, beta);
    std::vector<std::vector<int>> blocks;
    std::vector<int> where(n, -1);
    for (int i = 0; i < n; ++i) {
      if (where[cls[i]] < 0) {
        where[cls[i]] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[where[cls[i]]].push_back(i);
    }
    if (blocks.size() == 1) continue;  // identified everything: trivial
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    candidates.insert(std::move(blocks));
  }
  if (candidates.empty()) {
    out.kind = BlockSystem::Kind::primitive;
    return out;
  }
  std::size_t best = n;
  for (const auto& c : candidates) best = std::min(best, c.front().size());
  for (const auto& c : candidates)
    if (c.front().size() == best) {
      out.kind = BlockSystem::Kind::blocks;
      out.blocks = c;
      return out;  // set iteration is sorted: first hit is lexicographically least
    }
  return out;
}

// U acting within b blocks of size a, V permuting the blocks: degree a*b,
// block j covers points {j*a, ..., j*a + a - 1}, order |U|^b * |V|.
inline PermGroup wreath_product(const PermGroup& u, const PermGroup& v) {
  int a = u.degree();
  int b = v.degree();
  int n = a * b;
  std::vector<Permutation> gens;
  for (int j = 0; j < b; ++j)
    for (const auto& g : u.generators()) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      for (int x = 0; x < a; ++x) img[j * a + x] = j * a + g(x);
      gens.emplace_back(std::move(img));
    }
  for (const auto& h : v.generators()) {
    std::vector<int> img(n);
    for (int j = 0; j < b; ++j)
      for (int x = 0; x < a; ++x) img[j * a + x] = h(j) * a + x;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

// direct product acting on disjoint point sets (degree a + b)
inline PermGroup direct_product(const PermGroup& u, const PermGroup& v) {
  int a = u.degree();
  int n = a + v.degree();
  std::vector<Permutation> gens;
  for (const auto& g : u.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int x = 0; x < a; ++x) img[x] = g(x);
    gens.emplace_back(std::move(img));
  }
  for (const auto& h : v.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int x = 0; x < v.degree(); ++x) img[a + x] = a + h(x);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace invgen
