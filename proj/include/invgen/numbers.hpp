#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace invgen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Decimal expansion of r >= 0 with `digits` places, rounding half away from
// zero. Negative values get a leading '-'; rounding is still away from zero.
inline std::string decimal_string(const BigRational& r, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scaled = num * big_pow(10, digits);
  BigInt q = scaled / den;
  BigInt rem = scaled % den;
  if (rem * 2 >= den) ++q;
  BigInt whole = q / big_pow(10, digits);
  BigInt frac = q % big_pow(10, digits);
  std::string fs = frac.str();
  fs.insert(fs.begin(), digits - fs.size(), '0');
  std::string out = whole.str();
  if (digits > 0) out += "." + fs;
  if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

inline double to_double(const BigRational& r) {
  return r.convert_to<double>();
}

}  // namespace invgen
