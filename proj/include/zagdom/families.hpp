#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zagdom/canonical.hpp"
#include "zagdom/domination.hpp"
#include "zagdom/enumerate.hpp"
#include "zagdom/errors.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {

// The three extremal families:
//   T(n,gamma): star K_{1,n-gamma} with pendant edges on gamma-1 of its leaves;
//               unique minimizer of pi1 / maximizer of pi2.
//   D(n,gamma): gamma stars of orders floor(n/gamma) and ceil(n/gamma) joined
//               by gamma-1 leaf-to-leaf edges; extremal when gamma <= n/3.
//   L(n,gamma): degree-{1,2,3} trees with prescribed degree counts, at most one
//               pendant neighbor per vertex, and a minimum dominating set with
//               one of two degree profiles; extremal when (n+3)/3 <= gamma <= n/2.

inline bool t_family_feasible(int n, int gamma) {
  return n >= 2 && gamma >= 1 && 2 * gamma <= n;
}
inline bool d_family_feasible(int n, int gamma) { return gamma >= 1 && 3 * gamma <= n; }
inline bool l_family_feasible(int n, int gamma) {
  return 3 * gamma >= n + 3 && 2 * gamma <= n;
}

inline Tree build_T(int n, int gamma) {
  if (!t_family_feasible(n, gamma)) {
    throw InfeasibleSpec("T family needs n >= 2 and 1 <= gamma <= n/2, got n=" +
                         std::to_string(n) + " gamma=" + std::to_string(gamma));
  }
  // Center 0, star leaves 1..n-gamma, then one pendant under each of the first
  // gamma-1 leaves.
  std::vector<Edge> edges;
  int star_leaves = n - gamma;
  for (int i = 1; i <= star_leaves; ++i) edges.emplace_back(0, i);
  for (int j = 0; j < gamma - 1; ++j) edges.emplace_back(1 + j, star_leaves + 1 + j);
  return Tree::from_edge_list(n, edges);
}

// Degree multiset shared by all members of D(n,gamma); classes with equal
// degree merge (the quotient floor((n-gamma)/gamma) can itself be 2).
inline DegreeMultiset d_family_degree_counts(int n, int gamma) {
  if (!d_family_feasible(n, gamma)) {
    throw InfeasibleSpec("D family needs 1 <= gamma <= n/3, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  int q = (n - gamma) / gamma;
  std::map<int, int> counts;
  auto add = [&counts](int degree, int count) {
    if (count != 0) counts[degree] += count;
  };
  add(1, n - 3 * gamma + 2);
  add(2, 2 * gamma - 2);
  add(q, 2 * gamma - n + gamma * q);
  add(q + 1, n - gamma - gamma * q);
  return DegreeMultiset(std::move(counts));
}

namespace detail {

// Joins stars along the shape of a super-tree, one fresh leaf per end of each
// super-edge. Returns nothing when some star lacks enough leaves.
inline std::optional<Tree> assemble_d_member(const Tree& super, const std::vector<int>& orders) {
  int gamma = super.order();
  int n = 0;
  for (int o : orders) n += o;
  for (int s = 0; s < gamma; ++s) {
    if (super.degree(s) > orders[static_cast<std::size_t>(s)] - 1) return std::nullopt;
  }
  std::vector<int> center(static_cast<std::size_t>(gamma));
  std::vector<int> first_leaf(static_cast<std::size_t>(gamma));
  std::vector<int> used(static_cast<std::size_t>(gamma), 0);
  std::vector<Edge> edges;
  int next_id = 0;
  for (int s = 0; s < gamma; ++s) {
    center[static_cast<std::size_t>(s)] = next_id++;
    first_leaf[static_cast<std::size_t>(s)] = next_id;
    for (int i = 1; i < orders[static_cast<std::size_t>(s)]; ++i) {
      edges.emplace_back(center[static_cast<std::size_t>(s)], next_id++);
    }
  }
  for (const auto& [a, b] : super.edges()) {
    int la = first_leaf[static_cast<std::size_t>(a)] + used[static_cast<std::size_t>(a)]++;
    int lb = first_leaf[static_cast<std::size_t>(b)] + used[static_cast<std::size_t>(b)]++;
    edges.emplace_back(la, lb);
  }
  return Tree::from_edge_list(n, edges);
}

}  // namespace detail

// All non-isomorphic members of D(n,gamma), sorted by canonical code.
// Constructive: iterate free super-trees on gamma nodes and all placements of
// the r = n mod gamma larger stars, deduplicate by canonical code, and keep
// trees whose domination number is gamma (Definition requires it).
inline std::vector<Tree> build_D_members(int n, int gamma) {
  if (!d_family_feasible(n, gamma)) {
    throw InfeasibleSpec("D family needs 1 <= gamma <= n/3, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  int small = n / gamma;
  int r = n % gamma;
  std::map<CanonicalCode, Tree> members;
  for (const Tree& super : enumerate_trees(gamma, std::max(gamma, kDefaultEnumerationCap))) {
    // Choose which super-nodes carry the larger stars.
    std::vector<int> pick(static_cast<std::size_t>(gamma), 0);
    std::fill(pick.begin(), pick.begin() + r, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> orders(static_cast<std::size_t>(gamma), small);
      for (int s = 0; s < gamma; ++s) orders[static_cast<std::size_t>(s)] += pick[static_cast<std::size_t>(s)];
      auto tree = detail::assemble_d_member(super, orders);
      if (!tree) continue;
      if (domination_number(*tree).gamma != gamma) continue;
      members.emplace(canonical_code(*tree), *tree);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  std::vector<Tree> result;
  result.reserve(members.size());
  for (auto& [code, tree] : members) result.push_back(std::move(tree));
  return result;
}

inline bool is_member_D(const Tree& t, int n, int gamma) {
  if (!d_family_feasible(n, gamma)) {
    throw InfeasibleSpec("D family needs 1 <= gamma <= n/3, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  if (t.order() != n) return false;
  CanonicalCode code = canonical_code(t);
  for (const Tree& member : build_D_members(n, gamma)) {
    if (canonical_code(member) == code) return true;
  }
  return false;
}

inline DegreeMultiset l_family_degree_counts(int n, int gamma) {
  if (!l_family_feasible(n, gamma)) {
    throw InfeasibleSpec("L family needs (n+3)/3 <= gamma <= n/2, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  return DegreeMultiset{{1, 3 * gamma - n}, {2, 3 * n - 6 * gamma + 2}, {3, 3 * gamma - n - 2}};
}

namespace detail {

struct SplitDegreeCounts {
  int in1 = 0, in2 = 0, in3 = 0;     // degrees inside D
  int out1 = 0, out2 = 0, out3 = 0;  // degrees outside D
};

inline SplitDegreeCounts split_degree_counts(const Tree& t, const DominatingSet& d) {
  SplitDegreeCounts c;
  std::vector<char> in_set(static_cast<std::size_t>(t.order()), 0);
  for (int v : d.members) in_set[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < t.order(); ++v) {
    int deg = t.degree(v);
    if (in_set[static_cast<std::size_t>(v)]) {
      if (deg == 1) ++c.in1;
      if (deg == 2) ++c.in2;
      if (deg == 3) ++c.in3;
    } else {
      if (deg == 1) ++c.out1;
      if (deg == 2) ++c.out2;
      if (deg == 3) ++c.out3;
    }
  }
  return c;
}

// Profile (i): D holds the degree-3 vertices plus n-2*gamma+2 of degree 2; the
// complement holds 2n-4*gamma of degree 2 plus all leaves.
inline bool matches_l_profile_i(const Tree& t, const DominatingSet& d, int n, int gamma) {
  auto c = split_degree_counts(t, d);
  return c.in3 == 3 * gamma - n - 2 && c.in2 == n - 2 * gamma + 2 && c.in1 == 0 &&
         c.out2 == 2 * n - 4 * gamma && c.out1 == 3 * gamma - n && c.out3 == 0;
}

// Profile (ii): D holds n-2*gamma of degree 2 plus all leaves; the complement
// holds the rest, each complement vertex with exactly one neighbor in D.
inline bool matches_l_profile_ii(const Tree& t, const DominatingSet& d, int n, int gamma) {
  auto c = split_degree_counts(t, d);
  if (!(c.in2 == n - 2 * gamma && c.in1 == 3 * gamma - n && c.in3 == 0 &&
        c.out2 == 2 * n - 4 * gamma + 2 && c.out3 == 3 * gamma - n - 2 && c.out1 == 0)) {
    return false;
  }
  std::vector<char> in_set(static_cast<std::size_t>(t.order()), 0);
  for (int v : d.members) in_set[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < t.order(); ++v) {
    if (in_set[static_cast<std::size_t>(v)]) continue;
    int in_d = 0;
    for (int w : t.neighbors(v)) in_d += in_set[static_cast<std::size_t>(w)];
    if (in_d != 1) return false;
  }
  return true;
}

inline bool has_vertex_with_two_pendant_neighbors(const Tree& t) {
  for (int v = 0; v < t.order(); ++v) {
    int pendants = 0;
    for (int w : t.neighbors(v)) {
      if (t.degree(w) == 1) ++pendants;
    }
    if (pendants >= 2) return true;
  }
  return false;
}

}  // namespace detail

// Membership in L(n,gamma), evaluated directly on t: degree counts, the
// at-most-one-pendant-neighbor condition, and existence of a minimum
// dominating set matching profile (i) or (ii).
inline bool is_member_L(const Tree& t, int n, int gamma) {
  if (!l_family_feasible(n, gamma)) {
    throw InfeasibleSpec("L family needs (n+3)/3 <= gamma <= n/2, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  if (t.order() != n) return false;
  if (!(degree_multiset(t) == l_family_degree_counts(n, gamma))) return false;
  if (detail::has_vertex_with_two_pendant_neighbors(t)) return false;
  if (domination_number(t).gamma != gamma) return false;
  for (const DominatingSet& d : all_minimum_dominating_sets(t)) {
    if (detail::matches_l_profile_i(t, d, n, gamma) ||
        detail::matches_l_profile_ii(t, d, n, gamma)) {
      return true;
    }
  }
  return false;
}

// All members of L(n,gamma) by filtered enumeration; Definition of L is an
// existence condition on degree profiles, not a construction recipe.
inline std::vector<Tree> build_L_members(int n, int gamma, int cap = kDefaultEnumerationCap) {
  if (!l_family_feasible(n, gamma)) {
    throw InfeasibleSpec("L family needs (n+3)/3 <= gamma <= n/2, got n=" + std::to_string(n) +
                         " gamma=" + std::to_string(gamma));
  }
  if (n > kMaxExactEnumerationOrder) {
    throw InstanceTooLarge("L membership needs minimum-dominating-set enumeration, capped at " +
                           std::to_string(kMaxExactEnumerationOrder));
  }
  std::map<CanonicalCode, Tree> members;
  TreeStream stream(n, gamma, cap);
  while (auto t = stream.next()) {
    if (is_member_L(*t, n, gamma)) members.emplace(canonical_code(*t), std::move(*t));
  }
  std::vector<Tree> result;
  result.reserve(members.size());
  for (auto& [code, tree] : members) result.push_back(std::move(tree));
  return result;
}

}  // namespace zagdom
