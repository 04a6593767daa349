#pragma once

// Solvable primitive permutation groups. Such a group is affine: the degree
// is a prime power p^d and the group sits between V and V x| H, where
// V = F_p^d acts on itself by translations and H <= GL(d,p) is solvable and
// irreducible (irreducibility is exactly primitivity here, since the blocks
// through 0 are the H-invariant subspaces). Degrees that are not prime
// powers admit none. The output is the family of inclusion-maximal
// cycle-type sets over all such groups of one degree, each with a generating
// set realizing it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "invgen/bits.hpp"
#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/permutation.hpp"
#include "invgen/small_group.hpp"

namespace invgen {

struct CTSetWitness {
  std::vector<CycleType> types;        // sorted, no duplicates
  std::vector<Permutation> witnesses;  // generate a transitive solvable group
                                       // whose element types are exactly `types`
};

namespace affine_detail {

// Vectors of F_p^d encoded as integers in [0, p^d), little-endian base-p digits.
struct CodeSpace {
  int p = 0, d = 0, q = 0;
  CodeSpace(int p_, int d_) : p(p_), d(d_), q(1) {
    for (int i = 0; i < d; ++i) q *= p;
  }
  std::array<int, 4> decode(int c) const {
    std::array<int, 4> v{0, 0, 0, 0};
    for (int i = 0; i < d; ++i) {
      v[i] = c % p;
      c /= p;
    }
    return v;
  }
  int encode(const std::array<int, 4>& v) const {
    int c = 0;
    for (int i = d; i-- > 0;) c = c * p + v[i];
    return c;
  }
  int add(int a, int b) const {
    std::array<int, 4> x = decode(a), y = decode(b);
    for (int i = 0; i < d; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
};

struct Matrix {
  int d = 0, p = 0;
  std::array<int, 16> a{};  // row-major
  int& at(int r, int c) { return a[r * d + c]; }
  int at(int r, int c) const { return a[r * d + c]; }
};

inline bool invertible(Matrix m) {
  for (int col = 0; col < m.d; ++col) {
    int piv = -1;
    for (int r = col; r < m.d; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    for (int c = 0; c < m.d; ++c) std::swap(m.a[piv * m.d + c], m.a[col * m.d + c]);
    int inv = 1;
    while (m.at(col, col) * inv % m.p != 1) ++inv;
    for (int c = 0; c < m.d; ++c) m.at(col, c) = m.at(col, c) * inv % m.p;
    for (int r = 0; r < m.d; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      int f = m.at(r, col);
      for (int c = 0; c < m.d; ++c)
        m.at(r, c) = (m.at(r, c) + (m.p - f) * m.at(col, c)) % m.p;
    }
  }
  return true;
}

inline Permutation matrix_perm(const CodeSpace& cs, const Matrix& m) {
  std::vector<int> img(cs.q);
  for (int v = 0; v < cs.q; ++v) {
    auto x = cs.decode(v);
    std::array<int, 4> y{0, 0, 0, 0};
    for (int r = 0; r < cs.d; ++r) {
      int s = 0;
      for (int c = 0; c < cs.d; ++c) s += m.at(r, c) * x[c];
      y[r] = s % cs.p;
    }
    img[v] = cs.encode(y);
  }
  return Permutation(img);
}

inline std::vector<Permutation> general_linear_perms(const CodeSpace& cs) {
  std::vector<Permutation> out;
  int cells = cs.d * cs.d;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= cs.p;
  for (long long code = 0; code < total; ++code) {
    Matrix m;
    m.d = cs.d;
    m.p = cs.p;
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      m.a[i] = static_cast<int>(c % cs.p);
      c /= cs.p;
    }
    if (invertible(m)) out.push_back(matrix_perm(cs, m));
  }
  return out;
}

// Echelon basis over F_p in up to 4 coordinates. Rows are kept sorted by
// pivot position with pivot entry 1 and zeros left of the pivot, so reducing
// a vector by the rows in storage order clears every pivot position for good.
class SpanBasis {
 public:
  SpanBasis(int p, int d) : p_(p), d_(d) {}

  // reduce v against the basis; extend and return true if independent
  bool insert(std::array<int, 4> v) {
    for (int i = 0; i < dim_; ++i) {
      int c = v[piv_[i]];
      if (c == 0) continue;
      for (int j = 0; j < d_; ++j) v[j] = (v[j] + (p_ - c) * rows_[i][j]) % p_;
    }
    int lead = -1;
    for (int j = 0; j < d_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    int inv = 1;
    while (v[lead] * inv % p_ != 1) ++inv;
    for (int j = 0; j < d_; ++j) v[j] = v[j] * inv % p_;
    int pos = dim_;
    while (pos > 0 && piv_[pos - 1] > lead) {
      rows_[pos] = rows_[pos - 1];
      piv_[pos] = piv_[pos - 1];
      --pos;
    }
    rows_[pos] = v;
    piv_[pos] = lead;
    ++dim_;
    return true;
  }

  int dim() const { return dim_; }

 private:
  int p_, d_, dim_ = 0;
  std::array<std::array<int, 4>, 4> rows_{};
  std::array<int, 4> piv_{};
};

// No proper nonzero invariant subspace: spin up the smallest invariant
// subspace from every nonzero vector and demand full dimension. Generator
// images of basis vectors suffice by linearity.
inline bool acts_irreducibly(const CodeSpace& cs, const std::vector<Permutation>& gens) {
  if (cs.d == 1) return true;
  if (gens.empty()) return false;
  for (int v = 1; v < cs.q; ++v) {
    SpanBasis basis(cs.p, cs.d);
    basis.insert(cs.decode(v));
    std::vector<int> reached{v};
    for (std::size_t i = 0; i < reached.size(); ++i)
      for (const Permutation& g : gens) {
        int w = g(reached[i]);
        if (basis.insert(cs.decode(w))) reached.push_back(w);
      }
    if (basis.dim() < cs.d) return false;
  }
  return true;
}

// cycle types of { v -> h(v) + w : h in H, w in V }
inline Bits affine_type_bits(const CodeSpace& cs, const std::vector<Permutation>& helems,
                             const PartitionTable& pt) {
  Bits out(pt.size());
  std::vector<int> img(cs.q);
  for (const Permutation& h : helems)
    for (int w = 0; w < cs.q; ++w) {
      for (int v = 0; v < cs.q; ++v) img[v] = cs.add(h(v), w);
      out.set(static_cast<std::size_t>(pt.index(cycle_type_of(Permutation(img)))));
    }
  return out;
}

inline std::vector<Permutation> translation_gens(const CodeSpace& cs) {
  std::vector<Permutation> out;
  int e = 1;
  for (int i = 0; i < cs.d; ++i, e *= cs.p) {
    std::vector<int> img(cs.q);
    for (int v = 0; v < cs.q; ++v) img[v] = cs.add(v, e);
    out.push_back(Permutation(img));
  }
  return out;
}

// cycle-type sets accumulated with exact dedup, thinned at the end
struct SetAccumulator {
  std::vector<Bits> sets;
  std::vector<std::vector<Permutation>> wits;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

  void add(Bits ct, std::vector<Permutation> wit) {
    auto& b = buckets[ct.hash()];
    for (std::size_t i : b)
      if (sets[i] == ct) return;
    b.push_back(sets.size());
    sets.push_back(std::move(ct));
    wits.push_back(std::move(wit));
  }

  std::vector<CTSetWitness> collect_maximal(const PartitionTable& pt) {
    std::vector<CTSetWitness> out;
    for (std::size_t i : maximal_indices(sets)) {
      CTSetWitness s;
      sets[i].for_each(
          [&](std::size_t t) { s.types.push_back(pt.type(static_cast<int>(t))); });
      std::sort(s.types.begin(), s.types.end());
      s.witnesses = std::move(wits[i]);
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const CTSetWitness& a, const CTSetWitness& b) {
      if (a.types.size() != b.types.size()) return a.types.size() > b.types.size();
      return a.types < b.types;
    });
    return out;
  }
};

// prime degree: the one maximal solvable primitive group is the full affine
// line x -> m x + w
inline CTSetWitness agl1_set(int q) {
  std::set<CycleType> types;
  std::vector<int> img(q);
  for (int m = 1; m < q; ++m)
    for (int w = 0; w < q; ++w) {
      for (int v = 0; v < q; ++v) img[v] = (m * v + w) % q;
      types.insert(cycle_type_of(Permutation(img)));
    }
  CTSetWitness s;
  s.types.assign(types.begin(), types.end());
  for (int v = 0; v < q; ++v) img[v] = (v + 1) % q;
  s.witnesses.push_back(Permutation(img));
  if (q > 2) {
    int g = 2;
    for (; g < q; ++g) {  // smallest primitive root
      int x = g % q, ord = 1;
      while (x != 1) {
        x = x * g % q;
        ++ord;
      }
      if (ord == q - 1) break;
    }
    for (int v = 0; v < q; ++v) img[v] = g * v % q;
    s.witnesses.push_back(Permutation(img));
  }
  return s;
}

// |GL(d,p)| small enough for a full multiplication table: enumerate all
// subgroups, keep the irreducible solvable ones
inline std::vector<CTSetWitness> affine_sets_via_table(int p, int d) {
  CodeSpace cs(p, d);
  MulTableGroup gl(cs.q, general_linear_perms(cs), true);
  const PartitionTable& pt = partition_table(cs.q);
  auto subs = gl.all_subgroups();
  SetAccumulator acc;
  for (const auto& h : subs) {
    std::vector<Permutation> hgens;
    for (int gi : h.gens) hgens.push_back(gl.perm(gi));
    if (!acts_irreducibly(cs, hgens)) continue;
    if (!gl.is_solvable_subgroup(h)) continue;
    std::vector<Permutation> helems;
    h.members.for_each([&](std::size_t e) { helems.push_back(gl.perm(static_cast<int>(e))); });
    Bits ct = affine_type_bits(cs, helems, pt);
    std::vector<Permutation> wit = translation_gens(cs);
    wit.insert(wit.end(), hgens.begin(), hgens.end());
    acc.add(std::move(ct), std::move(wit));
  }
  return acc.collect_maximal(pt);
}

// ---- degree 16. |GL(4,2)| = 20160 rules out a multiplication table, so
// work with permutations of the 16 vectors packed four bits per image into
// one uint64, and enumerate solvable subgroups up to conjugacy by cyclic
// extension: every solvable subgroup has a subnormal chain with prime cyclic
// quotients, so extending each class rep H by g in N(H) with g^p in H and
// deduplicating by conjugacy reaches them all.

namespace gl42 {

using Packed = std::uint64_t;
inline constexpr Packed kId = 0xfedcba9876543210ull;

inline int nib(Packed x, int i) { return static_cast<int>((x >> (4 * i)) & 15); }

inline Packed compose(Packed a, Packed b) {  // i -> a[b[i]]
  Packed r = 0;
  for (int i = 0; i < 16; ++i) r |= static_cast<Packed>(nib(a, nib(b, i))) << (4 * i);
  return r;
}

inline Packed invert(Packed a) {
  Packed r = 0;
  for (int i = 0; i < 16; ++i) r |= static_cast<Packed>(i) << (4 * nib(a, i));
  return r;
}

inline Packed power(Packed a, int e) {
  Packed r = kId;
  while (e > 0) {
    if (e & 1) r = compose(r, a);
    a = compose(a, a);
    e >>= 1;
  }
  return r;
}

inline bool member(const std::vector<Packed>& sorted_els, Packed x) {
  return std::binary_search(sorted_els.begin(), sorted_els.end(), x);
}

inline Permutation to_perm(Packed a) {
  std::vector<int> img(16);
  for (int i = 0; i < 16; ++i) img[i] = nib(a, i);
  return Permutation(img);
}

// all invertible 4x4 matrices over F_2 as packed permutations, sorted
inline std::vector<Packed> group_elements() {
  std::vector<Packed> out;
  for (int m = 0; m < 65536; ++m) {
    int rows[4] = {m & 15, (m >> 4) & 15, (m >> 8) & 15, (m >> 12) & 15};
    int r[4] = {rows[0], rows[1], rows[2], rows[3]};
    int rank = 0;
    for (int bit = 0; bit < 4; ++bit) {
      int piv = -1;
      for (int i = rank; i < 4; ++i)
        if ((r[i] >> bit) & 1) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(r[rank], r[piv]);
      for (int i = 0; i < 4; ++i)
        if (i != rank && ((r[i] >> bit) & 1)) r[i] ^= r[rank];
      ++rank;
    }
    if (rank < 4) continue;
    Packed perm = 0;
    for (int v = 0; v < 16; ++v) {
      int y = 0;
      for (int j = 0; j < 4; ++j) y |= (__builtin_popcount(rows[j] & v) & 1) << j;
      perm |= static_cast<Packed>(y) << (4 * v);
    }
    out.push_back(perm);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Cls {
  std::vector<Packed> els;  // sorted
  std::vector<Packed> gens;
};

// order plus exact cycle-type multiset; conjugation-invariant bucket key
inline std::uint64_t class_key(const std::vector<Packed>& els, const std::vector<Packed>& g,
                               const std::vector<std::uint8_t>& tidx, std::size_t nkeys) {
  std::vector<int> counts(nkeys, 0);
  for (Packed e : els) {
    std::size_t pos =
        static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), e) - g.begin());
    ++counts[tidx[pos]];
  }
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(els.size());
  for (std::size_t i = 0; i < nkeys; ++i)
    if (counts[i]) {
      mix(i);
      mix(static_cast<std::uint64_t>(counts[i]));
    }
  return h;
}

// some t in G maps <kgens> into lels by conjugation (orders already match)
inline bool conjugate_in(const std::vector<Packed>& g, const std::vector<Packed>& kgens,
                         const std::vector<Packed>& lels) {
  for (Packed t : g) {
    Packed ti = invert(t);
    bool ok = true;
    for (Packed gen : kgens)
      if (!member(lels, compose(ti, compose(gen, t)))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline std::vector<Packed> normalizer(const std::vector<Packed>& g, const Cls& h) {
  if (h.gens.empty()) return g;
  std::vector<Packed> out;
  for (Packed t : g) {
    Packed ti = invert(t);
    bool ok = true;
    for (Packed gen : h.gens)
      if (!member(h.els, compose(ti, compose(gen, t)))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(t);
  }
  return out;
}

inline std::vector<Cls> solvable_classes(const std::vector<Packed>& g,
                                         const std::vector<std::uint8_t>& tidx,
                                         std::size_t nkeys) {
  std::vector<Cls> reps;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  auto add = [&](Cls c) {
    std::uint64_t key = class_key(c.els, g, tidx, nkeys);
    auto& b = buckets[key];
    for (std::size_t i : b)
      if (reps[i].els.size() == c.els.size() &&
          (reps[i].els == c.els || conjugate_in(g, c.gens, reps[i].els)))
        return;
    b.push_back(reps.size());
    reps.push_back(std::move(c));
  };
  add(Cls{{kId}, {}});
  for (std::size_t next = 0; next < reps.size(); ++next) {
    Cls h = reps[next];  // copy: reps grows while we iterate
    std::vector<Packed> n = normalizer(g, h);
    for (int p : {2, 3, 5, 7}) {
      if (n.size() % (h.els.size() * static_cast<std::size_t>(p)) != 0) continue;
      // elements already landing in a constructed extension would rebuild it
      std::unordered_set<Packed> used;
      for (Packed t : n) {
        if (member(h.els, t) || used.count(t)) continue;
        if (!member(h.els, power(t, p))) continue;
        Cls k;
        k.els = h.els;
        k.els.reserve(h.els.size() * static_cast<std::size_t>(p));
        Packed tj = t;
        for (int j = 1; j < p; ++j) {
          for (Packed e : h.els) k.els.push_back(compose(e, tj));
          tj = compose(tj, t);
        }
        std::sort(k.els.begin(), k.els.end());
        for (Packed e : k.els) used.insert(e);
        k.gens = h.gens;
        k.gens.push_back(t);
        add(std::move(k));
      }
    }
  }
  return reps;
}

}  // namespace gl42

inline std::vector<CTSetWitness> affine_sets_deg16() {
  CodeSpace cs(2, 4);
  const PartitionTable& pt = partition_table(16);
  std::vector<gl42::Packed> g = gl42::group_elements();
  std::vector<std::uint8_t> tidx(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    tidx[i] = static_cast<std::uint8_t>(pt.index(cycle_type_of(gl42::to_perm(g[i]))));
  auto classes = gl42::solvable_classes(g, tidx, pt.size());
  SetAccumulator acc;
  for (const auto& c : classes) {
    std::vector<Permutation> hgens;
    for (gl42::Packed x : c.gens) hgens.push_back(gl42::to_perm(x));
    if (!acts_irreducibly(cs, hgens)) continue;
    std::vector<Permutation> helems;
    for (gl42::Packed x : c.els) helems.push_back(gl42::to_perm(x));
    Bits ct = affine_type_bits(cs, helems, pt);
    std::vector<Permutation> wit = translation_gens(cs);
    wit.insert(wit.end(), hgens.begin(), hgens.end());
    acc.add(std::move(ct), std::move(wit));
  }
  return acc.collect_maximal(pt);
}

}  // namespace affine_detail

// Inclusion-maximal cycle-type sets of solvable primitive groups of degree n,
// sorted by size descending then lexicographically. Empty when the degree is
// not a prime power (or is 1). Witnesses generate a realizing group.
inline std::vector<CTSetWitness> primitive_solvable_ct_sets(int n) {
  if (n < 2) return {};
  int p = 2;
  while (n % p != 0) ++p;
  int d = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++d;
  }
  if (m != 1) return {};
  if (d == 1) return {affine_detail::agl1_set(n)};
  if (n == 16) return affine_detail::affine_sets_deg16();
  long long glorder = 1, pd = n;
  long long pi = 1;
  for (int i = 0; i < d; ++i) {
    glorder *= pd - pi;
    pi *= p;
  }
  if (glorder > static_cast<long long>(kMulTableCap))
    throw CapabilityError("no solvable primitive group enumeration for degree " +
                          std::to_string(n));
  return affine_detail::affine_sets_via_table(p, d);
}

}  // namespace invgen
