#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/rng.hpp"

namespace invgen {

// Permutation of {0, ..., n-1} stored as an image table.
// Composition is functional: (a * b)(x) = a(b(x)), b applied first.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw InputError("image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  // cycles given on 0-based points; untouched points are fixed
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 0 || from >= n) throw InputError("cycle point out of range");
        img[from] = to;
      }
    }
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& b) const {
    if (degree() != b.degree()) throw InputError("degree mismatch in product");
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[i] = img_[b.img_[i]];
    Permutation p;
    p.img_ = std::move(img);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(img);
    return p;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline CycleType cycle_type_of(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  std::vector<int> parts;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

// Uniform over S_n: Fisher-Yates driven by bounded(), so a fixed seed yields
// the same permutation sequence everywhere.
inline Permutation random_permutation(int n, Rng& rng) {
  if (n < 1) throw InputError("degree must be at least 1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation(std::move(img));
}

}  // namespace invgen
