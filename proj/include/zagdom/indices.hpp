#pragma once

#include "zagdom/bignat.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {

// The four Zagreb-type indices, exact at any magnitude. Single-vertex
// convention: empty sums are 0, empty products are 1; callers never feed n = 1
// into bound checks.

// First Zagreb index: sum of squared degrees.
inline BigNat m1(const Tree& t) {
  BigNat total = 0;
  for (int v = 0; v < t.order(); ++v) {
    long long d = t.degree(v);
    total += d * d;
  }
  return total;
}

// Second Zagreb index: sum over edges of the endpoint degree product.
inline BigNat m2(const Tree& t) {
  BigNat total = 0;
  for (const auto& [u, v] : t.edges()) {
    total += static_cast<long long>(t.degree(u)) * t.degree(v);
  }
  return total;
}

// First multiplicative Zagreb index: product of squared degrees. Degree-0
// terms (the single-vertex tree) are excluded by the empty-product convention.
inline BigNat pi1(const Tree& t) {
  BigNat product = 1;
  for (int v = 0; v < t.order(); ++v) {
    long long d = t.degree(v);
    if (d > 0) product *= d * d;
  }
  return product;
}

// Second multiplicative Zagreb index: product over edges of d(u)d(v).
inline BigNat pi2(const Tree& t) {
  BigNat product = 1;
  for (const auto& [u, v] : t.edges()) {
    product *= static_cast<long long>(t.degree(u)) * t.degree(v);
  }
  return product;
}

// Equivalent vertex form of pi2: product of d(u)^d(u). Kept separate as the
// cross-check route for the edge form.
inline BigNat pi2_vertex_form(const Tree& t) {
  BigNat product = 1;
  for (int v = 0; v < t.order(); ++v) {
    unsigned long long d = static_cast<unsigned long long>(t.degree(v));
    if (d > 0) product *= big_pow(d, d);
  }
  return product;
}

}  // namespace zagdom
