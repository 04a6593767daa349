#pragma once

// Integer polynomials: parsing, derivatives, and exact gcd over Z via a
// primitive pseudo-remainder sequence. Everything the mod-p certification
// needs from characteristic zero lives here.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "invgen/errors.hpp"
#include "invgen/numbers.hpp"

namespace invgen {

inline constexpr int kPolyDegreeCap = 4096;

class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial

  explicit IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) {
    normalize();
  }

  // Accepts sums of terms like "x^5 - 3x^2 + 2", with optional '*' between a
  // coefficient and x. Reports failures with a 1-based column.
  static IntPolynomial parse(const std::string& text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const BigInt& coeff(int i) const {
    static const BigInt zero{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<BigInt>& coeffs() const { return c_; }

  const BigInt& lead() const {
    if (c_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  IntPolynomial derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigInt(i));
    return IntPolynomial(std::move(d));
  }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      BigInt mag = a < 0 ? BigInt(-a) : a;
      if (out.empty())
        out += a < 0 ? "-" : "";
      else
        out += a < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) out += mag.str();
      if (i > 0) {
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<BigInt> c_;  // ascending powers, no trailing zeros

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

namespace poly_detail {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  int column() const { return static_cast<int>(i) + 1; }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
};

inline BigInt parse_integer(Cursor& c) {
  BigInt v = 0;
  std::size_t start = c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    ++c.i;
  }
  if (c.i == start) throw ParseError("expected digits", c.column());
  return v;
}

inline int parse_exponent(Cursor& c) {
  c.skip_ws();
  int col = c.column();
  BigInt e = parse_integer(c);
  if (e > kPolyDegreeCap) throw ParseError("exponent too large", col);
  return static_cast<int>(e);
}

}  // namespace poly_detail

inline IntPolynomial IntPolynomial::parse(const std::string& text) {
  poly_detail::Cursor c{text};
  std::vector<BigInt> acc;
  auto put = [&](int e, const BigInt& v) {
    if (static_cast<std::size_t>(e) >= acc.size()) acc.resize(e + 1, BigInt(0));
    acc[static_cast<std::size_t>(e)] += v;
  };
  bool first = true;
  for (;;) {
    c.skip_ws();
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
      c.skip_ws();
    } else if (!first) {
      break;  // no sign: either end of input or junk, handled below
    }
    if (c.done()) throw ParseError("expected a term", c.column());
    BigInt coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = poly_detail::parse_integer(c);
      have_coef = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        c.skip_ws();
        if (c.done() || c.peek() != 'x')
          throw ParseError("expected x after '*'", c.column());
      }
    }
    int expo = 0;
    if (!c.done() && c.peek() == 'x') {
      ++c.i;
      expo = 1;
      c.skip_ws();
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        expo = poly_detail::parse_exponent(c);
      }
    } else if (!have_coef) {
      throw ParseError("expected a number or x", c.column());
    }
    put(expo, sign * coef);
    first = false;
  }
  c.skip_ws();
  if (!c.done()) throw ParseError("unexpected character", c.column());
  return IntPolynomial(std::move(acc));
}

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPolynomial(std::move(c));
}

inline IntPolynomial poly_scale(const IntPolynomial& a, const BigInt& k) {
  std::vector<BigInt> c = a.coeffs();
  for (BigInt& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a reduced mod b; requires deg a >= deg b >= 0
inline IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  int da = a.degree(), db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  const BigInt& lb = b.lead();
  for (int k = da; k >= db; --k) {
    BigInt top = r[static_cast<std::size_t>(k)];
    for (int i = 0; i <= da; ++i)
      if (i != k) r[static_cast<std::size_t>(i)] *= lb;
    r[static_cast<std::size_t>(k)] = 0;
    if (top != 0)
      for (int i = 0; i < db; ++i)
        r[static_cast<std::size_t>(k - db + i)] -= top * b.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db > 0 ? db : 0));
  return IntPolynomial(std::move(r));
}

inline BigInt content(const IntPolynomial& a) {
  BigInt g = 0;
  for (const BigInt& x : a.coeffs()) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? BigInt(-g) : g;
}

inline IntPolynomial primitive_part(const IntPolynomial& a) {
  if (a.is_zero()) return a;
  BigInt g = content(a);
  if (a.lead() < 0) g = -g;
  std::vector<BigInt> c = a.coeffs();
  for (BigInt& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

// primitive gcd in Z[x] via a pseudo-remainder sequence with content removal
// at every step; exact, positive leading coefficient
inline IntPolynomial gcd_over_z(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// no repeated roots over Q, i.e. gcd(f, f') is constant
inline bool is_separable(const IntPolynomial& f) {
  if (f.degree() < 1) throw InputError("separability needs degree >= 1");
  return gcd_over_z(f, f.derivative()).degree() == 0;
}

}  // namespace invgen
