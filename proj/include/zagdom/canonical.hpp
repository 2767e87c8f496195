#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "zagdom/tree.hpp"

namespace zagdom {

// The one or two middle vertices of a longest path, found by repeatedly
// stripping leaves. Sorted by id.
inline std::vector<int> tree_centers(const Tree& t) {
  int n = t.order();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer, next;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = t.degree(v);
    if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    next.clear();
    for (int v : layer) {
      for (int w : t.neighbors(v)) {
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
      degree[static_cast<std::size_t>(v)] = 0;
    }
    layer.swap(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Relabeling-invariant encoding of a free tree: equal codes <=> isomorphic.
// Token string over '(' and ')': a vertex encodes as '(' + its children's codes
// in ascending lexicographic order + ')'. The tree is rooted at its center; for
// bicentral trees the code is the minimum over the two rootings.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string tokens) : tokens_(std::move(tokens)) {}

  const std::string& str() const { return tokens_; }

  bool operator==(const CanonicalCode& other) const { return tokens_ == other.tokens_; }
  bool operator!=(const CanonicalCode& other) const { return tokens_ != other.tokens_; }
  bool operator<(const CanonicalCode& other) const { return tokens_ < other.tokens_; }

 private:
  std::string tokens_;
};

namespace detail {

inline std::string rooted_code(const Tree& t, int root) {
  int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(root);
  parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(static_cast<std::size_t>(n));
  std::vector<std::vector<std::string>> children(static_cast<std::size_t>(n));
  for (std::size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    auto& kids = children[static_cast<std::size_t>(v)];
    std::sort(kids.begin(), kids.end());
    std::string& c = code[static_cast<std::size_t>(v)];
    c.reserve(2 + kids.size() * 2);
    c.push_back('(');
    for (const auto& k : kids) c += k;
    c.push_back(')');
    if (v != root) {
      children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(
          std::move(c));
    }
  }
  return code[static_cast<std::size_t>(root)];
}

}  // namespace detail

inline CanonicalCode canonical_code(const Tree& t) {
  auto centers = tree_centers(t);
  std::string code = detail::rooted_code(t, centers.front());
  if (centers.size() == 2) {
    std::string other = detail::rooted_code(t, centers.back());
    if (other < code) code = std::move(other);
  }
  return CanonicalCode(std::move(code));
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace zagdom
