#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"
#include "invgen/permutation.hpp"
#include "invgen/rng.hpp"

using namespace invgen;

namespace {

// independent partition counter: number of partitions of n with parts <= cap
long long count_partitions(int n, int cap) {
  if (n == 0) return 1;
  if (n < 0 || cap == 0) return 0;
  return count_partitions(n - cap, cap) + count_partitions(n, cap - 1);
}

int inversion_parity(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2;
}

// trace orbits directly, independent of cycle_type_of's bookkeeping
std::vector<int> orbit_lengths(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::vector<int> lens;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

}  // namespace

TEST_CASE("partition enumeration matches an independent counter") {
  const long long known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    CHECK(static_cast<long long>(enumerate_partitions(n).size()) == known[n]);
    CHECK(count_partitions(n, n == 0 ? 1 : n) == known[n]);
  }
  CHECK_THROWS_AS(enumerate_partitions(kPartitionDegreeCap + 1), SizeError);
  CHECK_THROWS_AS(enumerate_partitions(-1), InputError);
}

TEST_CASE("partition table is strictly ordered and self-inverse") {
  for (int n : {1, 4, 6, 10}) {
    const PartitionTable& pt = partition_table(n);
    for (std::size_t i = 0; i + 1 < pt.size(); ++i)
      CHECK(pt.type(static_cast<int>(i)) < pt.type(static_cast<int>(i + 1)));
    for (std::size_t i = 0; i < pt.size(); ++i)
      CHECK(pt.index(pt.type(static_cast<int>(i))) == static_cast<int>(i));
  }
  const PartitionTable& p6 = partition_table(6);
  CHECK(p6.type(0).str() == "[6]");
  CHECK(p6.type(static_cast<int>(p6.size()) - 1).str() == "[1,1,1,1,1,1]");
}

TEST_CASE("cycle type invariants") {
  CycleType t({2, 5, 1, 3});
  CHECK(t.parts() == std::vector<int>{5, 3, 2, 1});
  CHECK(t.degree() == 11);
  CHECK(t.num_parts() == 4);
  CHECK(t.multiplicity(2) == 1);
  CHECK(t.multiplicity(4) == 0);
  CHECK_THROWS_AS(CycleType({3, 0}), InputError);
  CHECK_THROWS_AS(CycleType({-2}), InputError);
}

TEST_CASE("parity agrees with inversion counts") {
  CHECK(CycleType({5}).parity() == 0);
  CHECK(CycleType({4, 1}).parity() == 1);
  CHECK(CycleType({2, 2, 1}).parity() == 0);
  CHECK(CycleType({1, 1, 1, 1}).parity() == 0);
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Permutation p = random_permutation(9, rng);
    CHECK(cycle_type_of(p).parity() == inversion_parity(p));
  }
}

TEST_CASE("centralizer orders and class sizes") {
  CHECK(centralizer_order(CycleType({2, 2, 1})) == 8);
  CHECK(class_size(CycleType({2, 2, 1})) == 15);
  for (int n = 2; n <= 10; ++n)
    CHECK(class_size(CycleType({n})) == factorial(static_cast<unsigned>(n - 1)));
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const CycleType& t : enumerate_partitions(n)) total += class_size(t);
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("pattern probability bound is exact for full classes") {
  // P(at least one k-cycle) <= 1/k at the bound's multiplicity vector
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    m[static_cast<std::size_t>(k - 1)] = 1;
    CHECK(min_pattern_probability_bound(m) == BigRational(1, k));
  }
  CHECK(min_pattern_probability_bound({2, 1}) == BigRational(1, 4));
  CHECK_THROWS_AS(min_pattern_probability_bound({-1}), InputError);
}

TEST_CASE("permutation algebra") {
  Permutation a = Permutation::from_cycles(5, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(5, {{2, 3}});
  Permutation ab = a * b;
  for (int x = 0; x < 5; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(cycle_type_of(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}})).str() ==
        "[3,2,1]");
  CHECK(cycle_type_of(Permutation::identity(6)).str() == "[1,1,1,1,1,1]");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), InputError);
  CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), InputError);
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_permutation(8, rng);
    CHECK(cycle_type_of(p).parts() == orbit_lengths(p));
  }
}

TEST_CASE("uniformity of random permutations over S_4") {
  std::map<Permutation, int> freq;
  Rng rng(12345);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++freq[random_permutation(4, rng)];
  CHECK(freq.size() == 24);
  double expected = draws / 24.0;
  double chi2 = 0;
  for (const auto& [p, count] : freq) {
    double d = count - expected;
    chi2 += d * d / expected;
  }
  // df = 23: mean 23, sd sqrt(46); allow five sigma
  CHECK(chi2 < 23.0 + 5.0 * std::sqrt(46.0));
}

TEST_CASE("bounded draws are deterministic and near-uniform") {
  Rng r1 = derived_rng(42, 3);
  Rng r2 = derived_rng(42, 3);
  for (int i = 0; i < 50; ++i) CHECK(bounded(r1, 1000) == bounded(r2, 1000));
  Rng rng(5);
  std::vector<int> freq(5, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++freq[static_cast<std::size_t>(bounded(rng, 5))];
  for (int v = 0; v < 5; ++v) {
    double dev = std::abs(freq[static_cast<std::size_t>(v)] - draws / 5.0);
    CHECK(dev < 5.0 * std::sqrt(draws * 0.2 * 0.8));
  }
}

TEST_CASE("exact arithmetic helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(12) == BigInt("479001600"));
  CHECK(big_pow(BigInt(3), 5) == 243);
  CHECK(decimal_string(BigRational(1, 4), 3) == "0.250");
  CHECK(decimal_string(BigRational(11, 45), 30) ==
        "0.244444444444444444444444444444");
  CHECK(decimal_string(BigRational(2, 3), 6) == "0.666667");
  CHECK(decimal_string(BigRational(1, 8), 2) == "0.13");
  CHECK(decimal_string(BigRational(-1, 8), 2) == "-0.13");
  CHECK(decimal_string(BigRational(0), 3) == "0.000");
  CHECK(decimal_string(BigRational(7), 2) == "7.00");
}

TEST_CASE("parse errors carry 1-based columns") {
  ParseError e("expected digits", 7);
  CHECK(e.column == 7);
  CHECK(std::string(e.what()).find("at column 7") != std::string::npos);
}
