#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "invgen/atlas.hpp"
#include "invgen/bits.hpp"
#include "invgen/cycle_type_set.hpp"
#include "invgen/perm_group.hpp"
#include "invgen/rng.hpp"
#include "invgen/small_group.hpp"

using namespace invgen;

namespace {

PermGroup sym(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> gens = {Permutation::from_cycles(n, {{0, 1}}),
                                   Permutation::from_cycles(n, {all})};
  if (n < 2) gens.clear();
  return PermGroup(n, gens);
}

PermGroup cyclic(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {all})});
}

std::set<std::string> type_strings(const std::vector<CycleType>& ts) {
  std::set<std::string> out;
  for (const CycleType& t : ts) out.insert(t.str());
  return out;
}

std::set<std::set<std::string>> family_of(const std::vector<AtlasRow>& rows) {
  std::set<std::set<std::string>> out;
  for (const AtlasRow& r : rows) out.insert(type_strings(r.types));
  return out;
}

const Atlas& shared_atlas() {
  static Atlas a = Atlas::build(15);
  return a;
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("atlas equals exhaustive solvable-subgroup enumeration up to degree 6") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::set<std::string>> oracle;
    for (const auto& s : all_solvable_subgroup_ct_sets(n)) oracle.insert(type_strings(s));
    CHECK(family_of(shared_atlas().rows(n)) == oracle);
  }
}

TEST_CASE("row counts are stable across rebuilds") {
  const Atlas& a = shared_atlas();
  const std::pair<std::size_t, std::size_t> expected[] = {
      {1, 3}, {2, 4}, {1, 5}, {3, 6}, {2, 7}, {2, 11},
      {1, 12}, {3, 16}, {1, 23}, {2, 28}, {2, 36}};
  for (int n = 5; n <= 15; ++n) {
    CHECK(a.transitive_rows(n).size() == expected[n - 5].first);
    CHECK(a.rows(n).size() == expected[n - 5].second);
  }
}

TEST_CASE("every row is inclusion-maximal within its degree") {
  const Atlas& a = shared_atlas();
  for (int n = 2; n <= 12; ++n) {
    const auto& rows = a.rows(n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (i != j) CHECK_FALSE(rows[i].type_bits.subset_of(rows[j].type_bits));
  }
}

TEST_CASE("witnesses realize their rows exactly") {
  const Atlas& a = shared_atlas();
  for (int n = 2; n <= 9; ++n) {
    for (const AtlasRow& r : a.transitive_rows(n)) {
      REQUIRE_FALSE(r.witnesses.empty());
      PermGroup g(n, r.witnesses);
      CHECK(g.is_transitive());
      CHECK(g.is_solvable());
      CHECK(type_strings(g.cycle_type_set()) == type_strings(r.types));
    }
    for (const AtlasRow& r : a.rows(n)) {
      REQUIRE_FALSE(r.witnesses.empty());
      PermGroup g(n, r.witnesses);
      CHECK(g.is_solvable());
      CHECK(type_strings(g.cycle_type_set()) == type_strings(r.types));
    }
  }
}

TEST_CASE("wreath law matches brute-force wreath products") {
  struct Pair {
    PermGroup u, v;
  };
  std::vector<Pair> corpus;
  corpus.push_back({sym(2), sym(3)});
  corpus.push_back({sym(3), sym(2)});
  corpus.push_back({cyclic(4), sym(2)});
  corpus.push_back({sym(2), cyclic(5)});
  corpus.push_back({cyclic(5), sym(3)});
  corpus.push_back({sym(4), sym(3)});
  for (const Pair& c : corpus) {
    PermGroup w = wreath_product(c.u, c.v);
    CHECK(type_strings(wreath_ct(c.u.cycle_type_set(), c.v.cycle_type_set())) ==
          type_strings(w.cycle_type_set()));
  }
}

TEST_CASE("product law matches direct products") {
  PermGroup d1 = direct_product(sym(3), sym(2));
  CHECK(type_strings(product_ct(sym(3).cycle_type_set(), sym(2).cycle_type_set())) ==
        type_strings(d1.cycle_type_set()));
  PermGroup d2 = direct_product(cyclic(4), sym(4));
  CHECK(type_strings(product_ct(cyclic(4).cycle_type_set(), sym(4).cycle_type_set())) ==
        type_strings(d2.cycle_type_set()));
}

TEST_CASE("wreath composition is associative on type sets") {
  auto a = sym(2).cycle_type_set();
  auto b = sym(3).cycle_type_set();
  auto c = cyclic(2).cycle_type_set();
  CHECK(type_strings(wreath_ct(wreath_ct(a, b), c)) ==
        type_strings(wreath_ct(a, wreath_ct(b, c))));
  auto d = cyclic(3).cycle_type_set();
  CHECK(type_strings(wreath_ct(wreath_ct(c, d), c)) ==
        type_strings(wreath_ct(c, wreath_ct(d, c))));
}

TEST_CASE("the two imprimitive families at degree 6 are incomparable") {
  auto small_over_big = type_strings(
      wreath_ct(sym(2).cycle_type_set(), sym(3).cycle_type_set()));
  auto big_over_small = type_strings(
      wreath_ct(sym(3).cycle_type_set(), sym(2).cycle_type_set()));
  CHECK_FALSE(std::includes(small_over_big.begin(), small_over_big.end(),
                            big_over_small.begin(), big_over_small.end()));
  CHECK_FALSE(std::includes(big_over_small.begin(), big_over_small.end(),
                            small_over_big.begin(), small_over_big.end()));
}

TEST_CASE("maximal set filtering agrees with the quadratic definition") {
  CHECK(maximal_indices({}) == std::vector<std::size_t>{});
  std::vector<Bits> fixture;
  for (auto mask : {0b0011u, 0b0111u, 0b1000u, 0b0001u}) {
    Bits b(4);
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) b.set(i);
    fixture.push_back(b);
  }
  CHECK(maximal_indices(fixture) == std::vector<std::size_t>{1, 2});

  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Bits> sets;
    for (int k = 0; k < 40; ++k) {
      Bits b(24);
      for (std::size_t i = 0; i < 24; ++i)
        if (bounded(rng, 3) == 0) b.set(i);
      bool dup = false;
      for (const Bits& prev : sets)
        if (prev == b) dup = true;
      if (!dup) sets.push_back(b);
    }
    auto kept = maximal_indices(sets);
    std::vector<std::size_t> brute;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (j != i && sets[i].subset_of(sets[j])) dominated = true;
      if (!dominated) brute.push_back(i);
    }
    CHECK(kept == brute);
  }
}

TEST_CASE("atlas JSON round trip preserves every row") {
  Atlas a = Atlas::build(10);
  auto path = temp_file("invgen-roundtrip.atlas.json");
  a.save(path.string());
  Atlas b = Atlas::load(path.string());
  CHECK(b.max_degree() == 10);
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(b.rows(n).size() == a.rows(n).size());
    CHECK(family_of(b.rows(n)) == family_of(a.rows(n)));
    CHECK(family_of(b.transitive_rows(n)) == family_of(a.transitive_rows(n)));
    for (std::size_t i = 0; i < a.rows(n).size(); ++i)
      CHECK(b.rows(n)[i].provenance == a.rows(n)[i].provenance);
  }
  // saved bytes are stable
  auto path2 = temp_file("invgen-roundtrip2.atlas.json");
  b.save(path2.string());
  std::ifstream f1(path), f2(path2);
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("atlas load failures are typed") {
  auto good = temp_file("invgen-good.atlas.json");
  Atlas::build(4).save(good.string());

  auto truncated = temp_file("invgen-truncated.atlas.json");
  {
    std::ifstream in(good);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::ofstream out(truncated);
    out << all.substr(0, all.size() / 2);
  }
  CHECK_THROWS_AS(Atlas::load(truncated.string()), ParseError);

  auto wrong = temp_file("invgen-wrongformat.atlas.json");
  {
    std::ofstream out(wrong);
    out << "{\"format\":\"something-else\",\"version\":1}\n";
  }
  CHECK_THROWS_AS(Atlas::load(wrong.string()), InputError);

  CHECK_THROWS_AS(Atlas::load("/nonexistent/deeply/missing.json"), InputError);

  std::filesystem::remove(good);
  std::filesystem::remove(truncated);
  std::filesystem::remove(wrong);
}

TEST_CASE("degree queries outside the ceiling are refused by name") {
  Atlas a = Atlas::build(6);
  CHECK_THROWS_AS(a.rows(7), CapabilityError);
  CHECK_THROWS_AS(a.transitive_rows(0), InputError);
  try {
    a.rows(7);
  } catch (const CapabilityError& e) {
    std::string msg = e.what();
    CHECK(msg.find("7") != std::string::npos);
    CHECK(msg.find("6") != std::string::npos);
  }
}
