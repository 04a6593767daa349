#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"

namespace invgen {

inline constexpr int kPartitionDegreeCap = 64;

// A cycle type is an integer partition: parts weakly decreasing, all >= 1.
// The canonical order used everywhere (tables, serialized sets) is
// lexicographic on the decreasing part sequence, largest-first: for n=4 that
// is [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p < 1) throw InputError("cycle type parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  // multiplicity of part length i
  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  // sign of any permutation with this type: (degree - #parts) mod 2
  int parity() const { return (degree() - num_parts()) % 2; }

  bool operator==(const CycleType& o) const { return parts_ == o.parts_; }
  bool operator!=(const CycleType& o) const { return parts_ != o.parts_; }

  // canonical order: [4] < [3,1] < [2,2] < ...
  bool operator<(const CycleType& o) const {
    return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                        o.parts_.begin(), o.parts_.end(),
                                        std::greater<int>());
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> parts_;
};

struct CycleTypeHash {
  std::size_t operator()(const CycleType& t) const {
    std::size_t h = 1469598103934665603ull;
    for (int p : t.parts()) {
      h ^= static_cast<std::size_t>(p);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// All partitions of n in canonical order. p(64) ~ 1.7e6 is the supported
// ceiling; larger n must raise the cap explicitly.
inline std::vector<CycleType> enumerate_partitions(int n,
                                                   int cap = kPartitionDegreeCap) {
  if (n < 0) throw InputError("partition degree must be nonnegative");
  if (n > cap)
    throw SizeError("partition enumeration capped at degree " +
                    std::to_string(cap));
  std::vector<CycleType> out;
  std::vector<int> prefix;
  std::function<void(int, int)> gen = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      prefix.push_back(k);
      gen(rest - k, k);
      prefix.pop_back();
    }
  };
  gen(n, n);
  return out;
}

// |C_{S_n}(sigma)| for sigma of this type: prod_i i^{m_i} * m_i!
inline BigInt centralizer_order(const CycleType& t) {
  BigInt r = 1;
  int run = 0;
  int prev = 0;
  for (int p : t.parts()) {
    r *= p;
    if (p == prev) {
      ++run;
      r *= run;
    } else {
      prev = p;
      run = 1;
    }
  }
  return r;
}

// size of the S_n conjugacy class with this type, n = degree
inline BigInt class_size(const CycleType& t) {
  return factorial(static_cast<unsigned>(t.degree())) / centralizer_order(t);
}

// Upper bound for the probability that a uniform element of S_n contains at
// least m_i cycles of length i for every i: prod_i 1/(i^{m_i} m_i!).
// multiplicities[i-1] = m_i. Valid for every n >= sum i*m_i.
inline BigRational min_pattern_probability_bound(
    const std::vector<int>& multiplicities) {
  BigInt den = 1;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    int m = multiplicities[i];
    if (m < 0) throw InputError("multiplicities must be nonnegative");
    BigInt len = static_cast<int>(i + 1);
    den *= big_pow(len, static_cast<unsigned>(m)) *
           factorial(static_cast<unsigned>(m));
  }
  return BigRational(1, den);
}

// Indexed view of all partitions of one degree; shared by the atlas bitset
// machinery, coverage tables and the exact summation.
class PartitionTable {
 public:
  explicit PartitionTable(int degree, int cap = kPartitionDegreeCap)
      : degree_(degree), types_(enumerate_partitions(degree, cap)) {
    for (std::size_t i = 0; i < types_.size(); ++i)
      index_.emplace(types_[i], static_cast<int>(i));
  }

  int degree() const { return degree_; }
  std::size_t size() const { return types_.size(); }
  const CycleType& type(int idx) const { return types_.at(idx); }
  const std::vector<CycleType>& types() const { return types_; }

  int index(const CycleType& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
      throw InputError("cycle type " + t.str() + " is not a partition of " +
                       std::to_string(degree_));
    return it->second;
  }

 private:
  int degree_;
  std::vector<CycleType> types_;
  std::unordered_map<CycleType, int, CycleTypeHash> index_;
};

// Process-wide cache; tables are immutable once built.
inline const PartitionTable& partition_table(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PartitionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, std::make_unique<PartitionTable>(degree)).first;
  return *it->second;
}

}  // namespace invgen
