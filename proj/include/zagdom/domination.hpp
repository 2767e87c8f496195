#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zagdom/errors.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {

// Subset-enumeration routines below cap the order to keep memory and runtime
// bounded; the DP path has no cap.
inline constexpr int kMaxExactEnumerationOrder = 25;

struct DominatingSet {
  std::vector<int> members;  // sorted ascending

  bool operator==(const DominatingSet& other) const { return members == other.members; }
  bool operator<(const DominatingSet& other) const { return members < other.members; }
};

inline bool is_dominating(const Tree& t, const DominatingSet& d) {
  std::vector<char> in_set(static_cast<std::size_t>(t.order()), 0);
  for (int v : d.members) {
    if (v < 0 || v >= t.order()) return false;
    in_set[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < t.order(); ++v) {
    if (in_set[static_cast<std::size_t>(v)]) continue;
    bool covered = false;
    for (int w : t.neighbors(v)) {
      if (in_set[static_cast<std::size_t>(w)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct DominationResult {
  int gamma = 0;
  DominatingSet witness;  // lexicographically smallest minimum dominating set
};

// Edge counts relative to a dominating set D: k inside D, l crossing, p inside
// the complement. k + l + p = n - 1 always; |k - p| <= gamma - 1 when D is
// minimum.
struct EdgePartitionCounts {
  int k = 0;
  int l = 0;
  int p = 0;
};

namespace detail {

// Rooted view of the tree: BFS order from the root, parent pointers, children.
struct Rooted {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
};

inline Rooted root_at(const Tree& t, int root) {
  int n = t.order();
  Rooted r;
  r.parent.assign(static_cast<std::size_t>(n), -1);
  r.children.assign(static_cast<std::size_t>(n), {});
  r.order.reserve(static_cast<std::size_t>(n));
  r.order.push_back(root);
  r.parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    int v = r.order[i];
    for (int w : t.neighbors(v)) {
      if (r.parent[static_cast<std::size_t>(w)] == -1) {
        r.parent[static_cast<std::size_t>(w)] = v;
        r.children[static_cast<std::size_t>(v)].push_back(w);
        r.order.push_back(w);
      }
    }
  }
  r.parent[static_cast<std::size_t>(root)] = -1;
  return r;
}

inline constexpr int kInf = 1 << 28;

inline int sat_add(int a, int b) {
  if (a >= kInf || b >= kInf) return kInf;
  return std::min(kInf, a + b);
}

// Vertex states of the domination DP:
//   0 = in the set, 1 = out and dominated by a child, 2 = out and waiting for
// the parent. State masks restrict the allowed states per vertex (bit s set =
// state s allowed); the unconstrained DP passes mask 7 everywhere.
using StateTable = std::vector<std::array<int, 3>>;

inline StateTable domination_dp(const Rooted& r, const std::vector<std::uint8_t>& allowed) {
  int n = static_cast<int>(r.order.size());
  StateTable dp(static_cast<std::size_t>(n), {kInf, kInf, kInf});
  for (std::size_t i = r.order.size(); i-- > 0;) {
    int v = r.order[i];
    const auto& kids = r.children[static_cast<std::size_t>(v)];
    int sum_min3 = 0;    // children free
    int sum_min01 = 0;   // children in {0,1}
    int penalty = kInf;  // cheapest upgrade of one child to state 0
    int sum_state1 = 0;  // children all state 1
    for (int c : kids) {
      const auto& d = dp[static_cast<std::size_t>(c)];
      int m3 = std::min({d[0], d[1], d[2]});
      int m01 = std::min(d[0], d[1]);
      sum_min3 = sat_add(sum_min3, m3);
      sum_min01 = sat_add(sum_min01, m01);
      sum_state1 = sat_add(sum_state1, d[1]);
      if (m01 < kInf && d[0] < kInf) penalty = std::min(penalty, d[0] - m01);
    }
    auto& out = dp[static_cast<std::size_t>(v)];
    std::uint8_t mask = allowed[static_cast<std::size_t>(v)];
    if ((mask & 1) && sum_min3 < kInf) out[0] = 1 + sum_min3;
    if ((mask & 2) && !kids.empty() && sum_min01 < kInf && penalty < kInf) {
      out[1] = sum_min01 + penalty;
    }
    if ((mask & 4) && sum_state1 < kInf) out[2] = sum_state1;
  }
  return dp;
}

inline int dp_gamma(const Rooted& r, const std::vector<std::uint8_t>& allowed) {
  auto dp = domination_dp(r, allowed);
  const auto& root = dp[static_cast<std::size_t>(r.order.front())];
  return std::min(root[0], root[1]);
}

}  // namespace detail

// Exact domination number with the lexicographically smallest minimum
// dominating set as witness. Linear DP for gamma; the witness is fixed by n
// constrained DP re-runs, one per vertex.
inline DominationResult domination_number(const Tree& t) {
  int n = t.order();
  auto rooted = detail::root_at(t, 0);
  std::vector<std::uint8_t> allowed(static_cast<std::size_t>(n), 7);
  int gamma = detail::dp_gamma(rooted, allowed);
  DominationResult result;
  result.gamma = gamma;
  for (int v = 0; v < n; ++v) {
    std::uint8_t saved = allowed[static_cast<std::size_t>(v)];
    allowed[static_cast<std::size_t>(v)] = 1;  // force v into the set
    if (detail::dp_gamma(rooted, allowed) == gamma) {
      result.witness.members.push_back(v);
    } else {
      allowed[static_cast<std::size_t>(v)] = saved & 6;  // forbid instead
    }
  }
  return result;
}

namespace detail {

inline std::vector<std::uint32_t> closed_neighborhood_masks(const Tree& t) {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(t.order()));
  for (int v = 0; v < t.order(); ++v) {
    std::uint32_t m = 1u << v;
    for (int w : t.neighbors(v)) m |= 1u << w;
    masks[static_cast<std::size_t>(v)] = m;
  }
  return masks;
}

template <typename Fn>
inline void for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k == 0) return;
  std::uint32_t subset = (1u << k) - 1;
  std::uint32_t limit = 1u << n;
  while (subset < limit) {
    fn(subset);
    std::uint32_t c = subset & (~subset + 1);
    std::uint32_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;  // Gosper's hack
  }
}

}  // namespace detail

// Minimum dominating set size by exhaustive subset search. Verification oracle
// for the DP; capped at order 25.
inline int gamma_bruteforce(const Tree& t) {
  int n = t.order();
  if (n > kMaxExactEnumerationOrder) {
    throw InstanceTooLarge("gamma_bruteforce capped at order " +
                           std::to_string(kMaxExactEnumerationOrder) + ", got " +
                           std::to_string(n));
  }
  if (n == 1) return 1;
  auto masks = detail::closed_neighborhood_masks(t);
  std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    detail::for_each_subset_of_size(n, k, [&](std::uint32_t subset) {
      if (found) return;
      std::uint32_t covered = 0;
      std::uint32_t bits = subset;
      while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        covered |= masks[static_cast<std::size_t>(v)];
      }
      if (covered == full) found = true;
    });
    if (found) return k;
  }
  return n;  // unreachable: V(G) always dominates
}

// Every dominating set of minimum size, in lexicographic order. DP-guided
// enumeration: walks all optimal traces of the domination DP, so the work is
// proportional to the output rather than 2^n. Capped at order 25.
inline std::vector<DominatingSet> all_minimum_dominating_sets(const Tree& t) {
  int n = t.order();
  if (n > kMaxExactEnumerationOrder) {
    throw InstanceTooLarge("all_minimum_dominating_sets capped at order " +
                           std::to_string(kMaxExactEnumerationOrder) + ", got " +
                           std::to_string(n));
  }
  auto rooted = detail::root_at(t, 0);
  std::vector<std::uint8_t> allowed(static_cast<std::size_t>(n), 7);
  auto dp = detail::domination_dp(rooted, allowed);
  const auto& root_dp = dp[static_cast<std::size_t>(rooted.order.front())];
  int gamma = std::min(root_dp[0], root_dp[1]);

  std::vector<int> state(static_cast<std::size_t>(n), -1);
  std::vector<DominatingSet> results;

  // Assign states to the children of rooted.order[i] and recurse down the BFS
  // order; state[order[i]] is always decided before index i is visited.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == rooted.order.size()) {
      DominatingSet d;
      for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)] == 0) d.members.push_back(v);
      }
      results.push_back(std::move(d));
      return;
    }
    int v = rooted.order[i];
    int s = state[static_cast<std::size_t>(v)];
    const auto& kids = rooted.children[static_cast<std::size_t>(v)];
    if (s == 0) {
      // Children are independent; each must sit at its own 3-state minimum.
      std::function<void(std::size_t)> pick = [&](std::size_t j) {
        if (j == kids.size()) {
          walk(i + 1);
          return;
        }
        int c = kids[j];
        const auto& d = dp[static_cast<std::size_t>(c)];
        int m3 = std::min({d[0], d[1], d[2]});
        for (int sc = 0; sc < 3; ++sc) {
          if (d[static_cast<std::size_t>(sc)] != m3) continue;
          state[static_cast<std::size_t>(c)] = sc;
          pick(j + 1);
        }
        state[static_cast<std::size_t>(c)] = -1;
      };
      pick(0);
    } else if (s == 1) {
      // Children in {0,1}, total cost dp[v][1], at least one child in the set.
      int base = 0;
      for (int c : kids) {
        const auto& d = dp[static_cast<std::size_t>(c)];
        base += std::min(d[0], d[1]);
      }
      int slack = dp[static_cast<std::size_t>(v)][1] - base;
      std::function<void(std::size_t, int, bool)> pick = [&](std::size_t j, int left,
                                                             bool has_zero) {
        if (j == kids.size()) {
          if (left == 0 && has_zero) walk(i + 1);
          return;
        }
        int c = kids[j];
        const auto& d = dp[static_cast<std::size_t>(c)];
        int m01 = std::min(d[0], d[1]);
        for (int sc = 0; sc < 2; ++sc) {
          int cost = d[static_cast<std::size_t>(sc)];
          if (cost >= detail::kInf) continue;
          int extra = cost - m01;
          if (extra > left) continue;
          state[static_cast<std::size_t>(c)] = sc;
          pick(j + 1, left - extra, has_zero || sc == 0);
        }
        state[static_cast<std::size_t>(c)] = -1;
      };
      pick(0, slack, false);
    } else {
      // s == 2: every child is out and already dominated from its own subtree.
      for (int c : kids) state[static_cast<std::size_t>(c)] = 1;
      walk(i + 1);
      for (int c : kids) state[static_cast<std::size_t>(c)] = -1;
    }
  };

  int root = rooted.order.front();
  for (int s = 0; s < 2; ++s) {
    if (root_dp[static_cast<std::size_t>(s)] != gamma) continue;
    state[static_cast<std::size_t>(root)] = s;
    walk(0);
    state[static_cast<std::size_t>(root)] = -1;
  }
  std::sort(results.begin(), results.end());
  return results;
}

// Edge counts of t relative to the dominating set d.
inline EdgePartitionCounts edge_partition(const Tree& t, const DominatingSet& d) {
  if (!is_dominating(t, d)) throw NotDominating("set does not dominate the tree");
  std::vector<char> in_set(static_cast<std::size_t>(t.order()), 0);
  for (int v : d.members) in_set[static_cast<std::size_t>(v)] = 1;
  EdgePartitionCounts counts;
  for (const auto& [u, v] : t.edges()) {
    int inside = in_set[static_cast<std::size_t>(u)] + in_set[static_cast<std::size_t>(v)];
    if (inside == 2) {
      ++counts.k;
    } else if (inside == 1) {
      ++counts.l;
    } else {
      ++counts.p;
    }
  }
  return counts;
}

// Checks n_1 >= 3*gamma - n on trees whose degrees all lie in {1,2,3} with
// (n+3)/3 <= gamma <= n/2; the inequality must be strict when some vertex has
// two pendant neighbors. Throws PreconditionViolated outside that range.
inline bool check_pendant_lemma(const Tree& t) {
  int n = t.order();
  for (int v = 0; v < n; ++v) {
    int d = t.degree(v);
    if (d < 1 || d > 3) {
      throw PreconditionViolated("degree " + std::to_string(d) + " at vertex " +
                                 std::to_string(v) + " outside {1,2,3}");
    }
  }
  int gamma = domination_number(t).gamma;
  if (3 * gamma < n + 3 || 2 * gamma > n) {
    throw PreconditionViolated("gamma " + std::to_string(gamma) + " outside [(n+3)/3, n/2] for n " +
                               std::to_string(n));
  }
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) == 1) ++leaves;
  }
  bool has_double_pendant = false;
  for (int v = 0; v < n; ++v) {
    int pendant_neighbors = 0;
    for (int w : t.neighbors(v)) {
      if (t.degree(w) == 1) ++pendant_neighbors;
    }
    if (pendant_neighbors >= 2) {
      has_double_pendant = true;
      break;
    }
  }
  int slack = leaves - (3 * gamma - n);
  return has_double_pendant ? slack > 0 : slack >= 0;
}

}  // namespace zagdom
