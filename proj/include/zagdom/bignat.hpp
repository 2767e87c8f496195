#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "zagdom/errors.hpp"

namespace zagdom {

// Exact non-negative integer. Index values reach (n-gamma)^(n-gamma), far past
// 64 bits at modest n, and the equality characterizations need exactness, so
// everything index- and bound-valued goes through this type.
using BigNat = boost::multiprecision::cpp_int;

// b^e by repeated squaring. 0^0 = 1 (empty product convention).
inline BigNat big_pow(BigNat base, unsigned long long exp) {
  BigNat result = 1;
  while (exp > 0) {
    if (exp & 1ULL) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline BigNat big_pow(unsigned long long base, unsigned long long exp) {
  return big_pow(BigNat(base), exp);
}

inline std::string to_decimal(const BigNat& v) { return v.str(); }

inline BigNat from_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty decimal string");
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad decimal digit in \"" + s + "\"");
  }
  return BigNat(s);
}

}  // namespace zagdom
