#pragma once

// Test-only oracles, independent of the library's implementation paths:
//  - naive Prüfer generate-and-dedup enumeration of free trees (exhaustive
//    over all n^(n-2) labeled trees, canonicalized with a bit-packed AHU code)
//  - brute-force permutation isomorphism checking
//  - a tiny decimal bignum for cross-checking exact arithmetic
//  - uniform random labeled trees

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zagdom/tree.hpp"

namespace oracles {

// Canonical form of a labeled tree packed into a uint64: the AHU parenthesis
// string over '('=0, ')'=1, center-rooted, minimum over bicentral rootings.
// Requires n <= 32. Equal values <=> isomorphic trees of equal order.
std::uint64_t packed_canonical_code(int n, const int* edge_u, const int* edge_v);

std::uint64_t packed_canonical_code(const zagdom::Tree& t);

struct PruferOracleResult {
  std::vector<std::uint64_t> codes;        // sorted, one per isomorphism class
  std::vector<zagdom::Tree> representatives;  // aligned with codes
};

// Enumerates all n^(n-2) Prüfer sequences, decodes, canonicalizes and dedups.
// The work is sharded across threads by the leading Prüfer symbol; the result
// is deterministic regardless of thread count.
PruferOracleResult prufer_dedup_oracle(int n, int threads = 1);

// Decode a Prüfer sequence over [0,n) into the edges of the labeled tree.
std::vector<zagdom::Edge> prufer_decode(int n, const std::vector<int>& seq);

// Uniform random labeled tree via a random Prüfer sequence.
zagdom::Tree random_labeled_tree(int n, std::mt19937_64& rng);

// True iff some vertex bijection maps edges of a onto edges of b. O(n!).
bool permutation_isomorphic(const zagdom::Tree& a, const zagdom::Tree& b);

// Minimal decimal bignum, deliberately separate from the library's integer
// backend: base-10^9 limbs, schoolbook multiplication.
class DecimalBig {
 public:
  explicit DecimalBig(std::uint64_t v = 0);
  DecimalBig operator*(const DecimalBig& other) const;
  static DecimalBig pow(std::uint64_t base, unsigned exp);  // repeated squaring
  std::string str() const;

 private:
  std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9
};

}  // namespace oracles
