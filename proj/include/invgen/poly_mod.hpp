#pragma once

// Dense univariate arithmetic over F_p for word-sized p, plus the
// distinct-degree factorization that turns "f mod p" into a cycle type.
// Coefficient products stay below 2^62 because p is capped at 2^31.

#include <cstdint>
#include <utility>
#include <vector>

#include "invgen/cycle_type.hpp"
#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"

namespace invgen {

inline constexpr std::uint64_t kModPrimeCap = std::uint64_t(1) << 31;

class ModPolynomial {
 public:
  ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> ascending)
      : p_(p), c_(std::move(ascending)) {
    if (p < 2 || p >= kModPrimeCap) throw InputError("modulus out of range");
    for (std::uint64_t& x : c_) x %= p_;
    normalize();
  }

  static ModPolynomial reduce(const IntPolynomial& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const BigInt& a : f.coeffs()) {
      BigInt r = a % BigInt(p);
      if (r < 0) r += p;
      c.push_back(r.convert_to<std::uint64_t>());
    }
    return ModPolynomial(p, std::move(c));
  }

  static ModPolynomial x(std::uint64_t p) { return ModPolynomial(p, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  std::uint64_t coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  bool operator==(const ModPolynomial& o) const { return p_ == o.p_ && c_ == o.c_; }

  ModPolynomial monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = inv_mod(c_.back());
    std::vector<std::uint64_t> c = c_;
    for (std::uint64_t& x : c) x = x * inv % p_;
    return ModPolynomial(p_, std::move(c), 0);
  }

  ModPolynomial derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * (i % p_) % p_);
    return ModPolynomial(p_, std::move(d), 0);
  }

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
    return ModPolynomial(a.p_, std::move(c), 0);
  }

  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (a.coeff(static_cast<int>(i)) + a.p_ - b.coeff(static_cast<int>(i))) % a.p_;
    return ModPolynomial(a.p_, std::move(c), 0);
  }

  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ModPolynomial(a.p_, {}, 0);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    return ModPolynomial(a.p_, std::move(c), 0);
  }

  friend ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) {
    if (b.is_zero()) throw InputError("division by zero polynomial");
    std::vector<std::uint64_t> r = a.c_;
    int db = b.degree();
    std::uint64_t inv = b.inv_mod(b.c_.back());
    for (int k = a.degree(); k >= db; --k) {
      std::uint64_t top = r[static_cast<std::size_t>(k)];
      if (top == 0) continue;
      std::uint64_t q = top * inv % a.p_;
      for (int i = 0; i <= db; ++i) {
        std::size_t at = static_cast<std::size_t>(k - db + i);
        r[at] = (r[at] + a.p_ - q * b.c_[static_cast<std::size_t>(i)] % a.p_) % a.p_;
      }
    }
    r.resize(static_cast<std::size_t>(db > 0 ? db : 0));
    return ModPolynomial(a.p_, std::move(r), 0);
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;  // ascending powers, no trailing zeros

  // trusted: coefficients already reduced
  ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> c, int) : p_(p), c_(std::move(c)) {
    normalize();
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t inv_mod(std::uint64_t a) const {  // Fermat, p prime
    std::uint64_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }
};

inline ModPolynomial mod_gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// base^e mod m by binary exponentiation
inline ModPolynomial mod_powmod(ModPolynomial base, std::uint64_t e, const ModPolynomial& m) {
  ModPolynomial r(m.modulus(), {1});
  base = base % m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

inline bool is_squarefree_mod(const ModPolynomial& f) {
  if (f.degree() < 1) return false;
  return mod_gcd(f, f.derivative()).degree() == 0;
}

inline std::uint64_t scalar_inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// quotient of an exact division; any remainder is discarded
inline ModPolynomial divide_exact(const ModPolynomial& a, const ModPolynomial& b) {
  if (b.is_zero()) throw InputError("division by zero polynomial");
  int da = a.degree(), db = b.degree();
  if (da < db) return ModPolynomial(a.modulus(), {});
  std::uint64_t p = a.modulus();
  std::uint64_t lead_inv = scalar_inv_mod(b.coeffs().back(), p);
  std::vector<std::uint64_t> r = a.coeffs();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(da - db + 1), 0);
  for (int k = da; k >= db; --k) {
    std::uint64_t top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    std::uint64_t qc = top * lead_inv % p;
    q[static_cast<std::size_t>(k - db)] = qc;
    for (int i = 0; i <= db; ++i) {
      std::size_t at = static_cast<std::size_t>(k - db + i);
      r[at] = (r[at] + p - qc * b.coeffs()[static_cast<std::size_t>(i)] % p) % p;
    }
  }
  return ModPolynomial(p, std::move(q));
}

// Degrees of the irreducible factors of a squarefree f, as a cycle type of
// degree deg f. Stage d strips the product of all degree-d factors by taking
// gcd with x^(p^d) - x; the Frobenius power is carried along and re-reduced
// whenever the working polynomial shrinks.
inline CycleType ddf_pattern(const ModPolynomial& f) {
  if (f.degree() < 1) throw InputError("factorization pattern needs degree >= 1");
  if (!is_squarefree_mod(f)) throw InputError("polynomial is not squarefree mod p");
  std::vector<int> parts;
  ModPolynomial v = f.monic();
  ModPolynomial t = ModPolynomial::x(f.modulus()) % v;
  int d = 0;
  while (v.degree() > 0 && 2 * (d + 1) <= v.degree()) {
    ++d;
    t = mod_powmod(t, f.modulus(), v);
    ModPolynomial g = mod_gcd(v, t - ModPolynomial::x(f.modulus()));
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) parts.push_back(d);
      v = divide_exact(v, g);
      t = t % v;
    }
  }
  if (v.degree() > 0) parts.push_back(v.degree());
  return CycleType(parts);
}

}  // namespace invgen
