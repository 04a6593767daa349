#pragma once

// The solvable cycle-type atlas. For each degree n it holds the
// inclusion-maximal sets of cycle types realized by solvable subgroups of
// S_n, built recursively:
//
//   transitive(n) = thin( primitive rows
//                         + wreath_ct(T, P) for n = a*b, a,b >= 2,
//                           T in transitive(a), P in primitive(b) )
//   general(n)    = thin( transitive(n)
//                         + product_ct(T, G) for a + b = n, a >= 1, b >= 1,
//                           T in transitive(a), G in general(b) )
//
// Soundness: every candidate is the exact type set of a concrete solvable
// group (the witness generators), so nothing fictitious enters. Completeness:
// a transitive solvable group embeds in U wr V along its coarsest proper
// block system, whose top action is primitive; an intransitive one splits
// over the orbit of the lowest point; both bounds are monotone in the type
// sets of the pieces, so maximal rows for the pieces suffice.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "invgen/bits.hpp"
#include "invgen/cycle_type.hpp"
#include "invgen/cycle_type_set.hpp"
#include "invgen/errors.hpp"
#include "invgen/linear_group.hpp"
#include "invgen/perm_group.hpp"

namespace invgen {

struct AtlasRow {
  std::vector<CycleType> types;        // sorted
  Bits type_bits;                      // over partition_table(degree)
  std::string provenance;              // "base", "primitive", "wreath AxB", "product A+B"
  std::vector<Permutation> witnesses;  // generate a solvable group realizing
                                       // exactly these types; empty after load()
};

class Atlas {
 public:
  static Atlas build(int max_degree) {
    if (max_degree < 1) throw InputError("atlas degree must be positive");
    if (max_degree > kPartitionDegreeCap)
      throw SizeError("atlas degree exceeds partition cap");
    Atlas a;
    a.max_degree_ = max_degree;
    a.transitive_.resize(max_degree + 1);
    a.general_.resize(max_degree + 1);
    a.primitive_.resize(max_degree + 1);
    a.primitive_done_.assign(max_degree + 1, 0);
    for (int n = 1; n <= max_degree; ++n) a.build_degree(n);
    a.primitive_.clear();
    a.primitive_done_.clear();
    return a;
  }

  int max_degree() const { return max_degree_; }

  // inclusion-maximal rows over all solvable subgroups of S_n
  const std::vector<AtlasRow>& rows(int n) const {
    check_degree(n);
    return general_[n];
  }

  // inclusion-maximal rows over transitive solvable subgroups only
  const std::vector<AtlasRow>& transitive_rows(int n) const {
    check_degree(n);
    return transitive_[n];
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["format"] = "invgen-atlas";
    j["version"] = 1;
    j["max_degree"] = max_degree_;
    nlohmann::ordered_json degs = nlohmann::ordered_json::array();
    for (int n = 1; n <= max_degree_; ++n) {
      nlohmann::ordered_json d;
      d["degree"] = n;
      d["transitive"] = rows_json(transitive_[n]);
      d["general"] = rows_json(general_[n]);
      degs.push_back(std::move(d));
    }
    j["degrees"] = std::move(degs);
    return j;
  }

  static Atlas from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || j.value("format", std::string()) != "invgen-atlas")
      throw InputError("not an atlas file (missing format marker)");
    if (j.value("version", 0) != 1)
      throw InputError("unsupported atlas version");
    int maxd = j.value("max_degree", 0);
    if (maxd < 1 || maxd > kPartitionDegreeCap)
      throw InputError("atlas max_degree out of range");
    if (!j.contains("degrees") || !j["degrees"].is_array() ||
        j["degrees"].size() != static_cast<std::size_t>(maxd))
      throw InputError("atlas degree list malformed");
    Atlas a;
    a.max_degree_ = maxd;
    a.transitive_.resize(maxd + 1);
    a.general_.resize(maxd + 1);
    for (int n = 1; n <= maxd; ++n) {
      const auto& d = j["degrees"][static_cast<std::size_t>(n - 1)];
      if (d.value("degree", 0) != n)
        throw InputError("atlas degrees out of order");
      a.transitive_[n] = rows_from_json(d, "transitive", n);
      a.general_[n] = rows_from_json(d, "general", n);
    }
    return a;
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write atlas file: " + path);
    out << to_json().dump(1) << '\n';
    if (!out) throw InputError("failed writing atlas file: " + path);
  }

  static Atlas load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read atlas file: " + path);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("atlas file " + path + ": " + e.what(),
                       static_cast<int>(e.byte));
    }
    return from_json(j);
  }

 private:
  Atlas() = default;

  int max_degree_ = 0;
  std::vector<std::vector<AtlasRow>> transitive_, general_;
  std::vector<std::vector<AtlasRow>> primitive_;  // build-time cache
  std::vector<char> primitive_done_;

  const std::vector<AtlasRow>& prim_rows(int m) {
    if (!primitive_done_[m]) {
      primitive_done_[m] = 1;
      auto sets = primitive_solvable_ct_sets(m);
      for (CTSetWitness& s : sets)
        primitive_[m].push_back(
            make_row(m, std::move(s.types), "primitive", std::move(s.witnesses)));
    }
    return primitive_[m];
  }

  void check_degree(int n) const {
    if (n < 1) throw InputError("degree must be positive");
    if (n > max_degree_)
      throw CapabilityError("atlas covers degrees up to " +
                            std::to_string(max_degree_) + ", degree " +
                            std::to_string(n) + " requested");
  }

  // dedup by exact type set, then keep the inclusion-maximal rows
  struct RowAcc {
    std::vector<AtlasRow> rows;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

    void add(AtlasRow r) {
      auto& b = buckets[r.type_bits.hash()];
      for (std::size_t i : b)
        if (rows[i].type_bits == r.type_bits) return;
      b.push_back(rows.size());
      rows.push_back(std::move(r));
    }

    std::vector<AtlasRow> finish() {
      std::vector<Bits> bits;
      bits.reserve(rows.size());
      for (const auto& r : rows) bits.push_back(r.type_bits);
      std::vector<AtlasRow> out;
      for (std::size_t i : maximal_indices(bits)) out.push_back(std::move(rows[i]));
      std::sort(out.begin(), out.end(), [](const AtlasRow& a, const AtlasRow& b) {
        if (a.types.size() != b.types.size()) return a.types.size() > b.types.size();
        return a.types < b.types;
      });
      return out;
    }
  };

  static AtlasRow make_row(int degree, std::vector<CycleType> types, std::string prov,
                           std::vector<Permutation> wits) {
    const PartitionTable& pt = partition_table(degree);
    AtlasRow r;
    r.type_bits = Bits(pt.size());
    for (const CycleType& t : types)
      r.type_bits.set(static_cast<std::size_t>(pt.index(t)));
    r.types = std::move(types);
    r.provenance = std::move(prov);
    r.witnesses = std::move(wits);
    return r;
  }

  void build_degree(int n) {
    if (n == 1) {
      AtlasRow base = make_row(1, {CycleType({1})}, "base",
                               {Permutation::identity(1)});
      transitive_[1] = {base};
      general_[1] = {std::move(base)};
      return;
    }
    const PartitionTable& pt = partition_table(n);

    RowAcc trans;
    for (const AtlasRow& r : prim_rows(n)) trans.add(r);
    for (int a = 2; a <= n / 2; ++a) {
      if (n % a != 0) continue;
      int b = n / a;
      for (const AtlasRow& t : transitive_[a])
        for (const AtlasRow& p : prim_rows(b)) {
          std::vector<Permutation> wits;
          if (!t.witnesses.empty() && !p.witnesses.empty())
            wits = wreath_product(PermGroup(a, t.witnesses), PermGroup(b, p.witnesses))
                       .generators();
          trans.add(make_row(n, wreath_ct(t.types, p.types),
                             "wreath " + std::to_string(a) + "x" + std::to_string(b),
                             std::move(wits)));
        }
    }
    transitive_[n] = trans.finish();

    RowAcc gen;
    for (const AtlasRow& r : transitive_[n]) gen.add(r);
    for (int a = 1; a < n; ++a) {
      int b = n - a;
      // merge table: type index at a x type index at b -> type index at n
      const PartitionTable& pa = partition_table(a);
      const PartitionTable& pb = partition_table(b);
      std::vector<int> merge(pa.size() * pb.size());
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) {
          std::vector<int> parts = pa.type(static_cast<int>(i)).parts();
          const auto& q = pb.type(static_cast<int>(j)).parts();
          parts.insert(parts.end(), q.begin(), q.end());
          merge[i * pb.size() + j] = pt.index(CycleType(parts));
        }
      for (const AtlasRow& t : transitive_[a])
        for (const AtlasRow& g : general_[b]) {
          Bits bits(pt.size());
          t.type_bits.for_each([&](std::size_t i) {
            g.type_bits.for_each([&](std::size_t j) {
              bits.set(static_cast<std::size_t>(merge[i * pb.size() + j]));
            });
          });
          AtlasRow r;
          r.type_bits = std::move(bits);
          r.type_bits.for_each(
              [&](std::size_t k) { r.types.push_back(pt.type(static_cast<int>(k))); });
          std::sort(r.types.begin(), r.types.end());
          r.provenance = "product " + std::to_string(a) + "+" + std::to_string(b);
          if (!t.witnesses.empty() && !g.witnesses.empty())
            r.witnesses = direct_product(PermGroup(a, t.witnesses), PermGroup(b, g.witnesses))
                              .generators();
          gen.add(std::move(r));
        }
    }
    general_[n] = gen.finish();
  }

  static nlohmann::ordered_json rows_json(const std::vector<AtlasRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const AtlasRow& r : rows) {
      nlohmann::ordered_json jr;
      jr["provenance"] = r.provenance;
      nlohmann::ordered_json types = nlohmann::ordered_json::array();
      for (const CycleType& t : r.types) types.push_back(t.parts());
      jr["types"] = std::move(types);
      out.push_back(std::move(jr));
    }
    return out;
  }

  static std::vector<AtlasRow> rows_from_json(const nlohmann::ordered_json& d,
                                              const char* key, int degree) {
    if (!d.contains(key) || !d[key].is_array())
      throw InputError("atlas rows malformed at degree " + std::to_string(degree));
    std::vector<AtlasRow> out;
    for (const auto& jr : d[key]) {
      if (!jr.is_object() || !jr.contains("types") || !jr["types"].is_array())
        throw InputError("atlas row malformed at degree " + std::to_string(degree));
      std::vector<CycleType> types;
      for (const auto& jt : jr["types"]) {
        if (!jt.is_array()) throw InputError("atlas type malformed");
        std::vector<int> parts;
        for (const auto& v : jt) parts.push_back(v.get<int>());
        CycleType t(parts);
        if (t.degree() != degree)
          throw InputError("atlas type of wrong degree under degree " +
                           std::to_string(degree));
        types.push_back(std::move(t));
      }
      out.push_back(make_row(degree, std::move(types),
                             jr.value("provenance", std::string("unknown")), {}));
    }
    return out;
  }
};

}  // namespace invgen
