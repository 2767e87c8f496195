#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zagdom/domination.hpp"
#include "zagdom/errors.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {

// Free-tree enumeration is meant for desk-scale exhaustive sweeps; the cap is
// a guard against accidental combinatorial explosions, not a hard algorithmic
// limit. Overridable per stream (the CLI honors ZAGREB_DOM_CAP).
inline constexpr int kDefaultEnumerationCap = 18;

namespace detail {

// Canonical level sequence of a rooted tree: levels in preorder, root at 0,
// sibling subtrees in non-increasing lexicographic order. The Beyer-Hedetniemi
// successor rewrites positions p.. with cyclic copies of the block starting at
// the parent of p, yielding the next canonical sequence in decreasing
// lexicographic order.
inline bool bh_successor(std::vector<int>& levels, int p) {
  if (p <= 0) return false;
  int q = p - 1;
  while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
  for (std::size_t i = static_cast<std::size_t>(p); i < levels.size(); ++i) {
    levels[i] = levels[i - static_cast<std::size_t>(p - q)];
  }
  return true;
}

inline int last_deep_position(const std::vector<int>& levels) {
  for (std::size_t i = levels.size(); i-- > 0;) {
    if (levels[i] > 1) return static_cast<int>(i);
  }
  return 0;
}

// End of the first principal subtree: index of the second level-1 entry, or n.
inline int first_subtree_end(const std::vector<int>& levels) {
  for (std::size_t i = 2; i < levels.size(); ++i) {
    if (levels[i] == 1) return static_cast<int>(i);
  }
  return static_cast<int>(levels.size());
}

// A canonical rooted sequence represents a free tree exactly when the root is
// a center: the first principal subtree T1 (the tallest, by canonicity) may
// exceed the rest by at most one level, and in the bicentral boundary case the
// two halves are ordered by (size, lexicographic) with T1 the smaller.
inline bool is_free_tree_representative(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  if (n <= 2) return true;
  int m = first_subtree_end(levels);
  int left_height = 0;
  for (int i = 1; i < m; ++i) left_height = std::max(left_height, levels[static_cast<std::size_t>(i)] - 1);
  int rest_height = 0;
  for (int i = m; i < n; ++i) rest_height = std::max(rest_height, levels[static_cast<std::size_t>(i)]);
  if (rest_height > left_height) return true;
  if (rest_height < left_height) return false;
  int left_size = m - 1;
  int rest_size = n - m + 1;
  if (left_size != rest_size) return left_size < rest_size;
  // Equal halves: compare the halves' own-rooted sequences.
  for (int i = 1; i < m; ++i) {
    int a = levels[static_cast<std::size_t>(i)] - 1;
    int b = (i == 1) ? 0 : levels[static_cast<std::size_t>(m + i - 2)];
    if (a != b) return a < b;
  }
  return true;
}

inline std::vector<int> center_rooted_path_levels(int n) {
  int h1 = n / 2;  // ceil((n-1)/2)
  std::vector<int> levels;
  levels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i <= h1; ++i) levels.push_back(i);
  for (int i = 1; i < n - h1; ++i) levels.push_back(i);
  return levels;
}

inline Tree tree_from_levels(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  std::vector<int> last_at_level(static_cast<std::size_t>(n), -1);
  last_at_level[0] = 0;
  for (int i = 1; i < n; ++i) {
    int level = levels[static_cast<std::size_t>(i)];
    edges.emplace_back(last_at_level[static_cast<std::size_t>(level - 1)], i);
    last_at_level[static_cast<std::size_t>(level)] = i;
  }
  return Tree::from_edge_list(n, edges);
}

}  // namespace detail

// Streams every isomorphism class of free trees of order n exactly once, as
// preorder-labeled canonical representatives, optionally filtered by
// domination number. The iteration state is the current level sequence, so a
// stream can be checkpointed and resumed for deterministic sharding.
class TreeStream {
 public:
  explicit TreeStream(int n, std::optional<int> gamma = std::nullopt,
                      int cap = kDefaultEnumerationCap)
      : n_(n), gamma_(gamma) {
    if (n < 1) throw DomainError("tree order must be >= 1, got " + std::to_string(n));
    if (n > cap) {
      throw CapExceeded("order " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
    }
    if (gamma && (*gamma < 1 || 2 * *gamma > n) && n > 1) {
      throw InfeasibleGamma("gamma " + std::to_string(*gamma) + " outside [1, n/2] for n " +
                            std::to_string(n));
    }
    if (n >= 2) levels_ = detail::center_rooted_path_levels(n);
  }

  // Next tree, or nullopt when the stream is exhausted.
  std::optional<Tree> next() {
    while (true) {
      if (finished_) return std::nullopt;
      if (n_ == 1) {
        finished_ = true;
        Tree t = Tree::from_edge_list(1, {});
        if (matches_filter(t)) return t;
        continue;
      }
      if (!started_) {
        started_ = true;  // the center-rooted path is always a valid start
      } else {
        advance();
        if (finished_) return std::nullopt;
      }
      Tree t = detail::tree_from_levels(levels_);
      if (matches_filter(t)) return t;
    }
  }

  // Serialized iteration state; feed to resume() to continue a stream from a
  // checkpoint. The state is the level sequence about to be yielded next.
  std::string state() const {
    std::ostringstream out;
    out << n_ << ";" << (finished_ ? 1 : 0) << ";" << (started_ ? 1 : 0) << ";";
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (i > 0) out << ",";
      out << levels_[i];
    }
    return out.str();
  }

  static TreeStream resume(const std::string& state, std::optional<int> gamma = std::nullopt,
                           int cap = kDefaultEnumerationCap) {
    std::istringstream in(state);
    std::string field;
    auto take = [&]() {
      if (!std::getline(in, field, ';')) throw ParseError("truncated stream state");
      return field;
    };
    int n = std::stoi(take());
    int finished = std::stoi(take());
    int started = std::stoi(take());
    TreeStream s(n, gamma, cap);
    s.finished_ = finished != 0;
    s.started_ = started != 0;
    if (n >= 2) {
      std::getline(in, field);
      std::istringstream seq(field);
      std::string tok;
      std::vector<int> levels;
      while (std::getline(seq, tok, ',')) levels.push_back(std::stoi(tok));
      if (static_cast<int>(levels.size()) != n) throw ParseError("stream state length mismatch");
      s.levels_ = std::move(levels);
    }
    return s;
  }

  int order() const { return n_; }

 private:
  void advance() {
    // From a just-yielded valid sequence, take ordinary successors; when a
    // candidate fails validity, every later sequence sharing its first
    // principal subtree fails too, so force the successor at the end of that
    // subtree and re-check.
    while (true) {
      int p = detail::is_free_tree_representative(levels_)
                  ? detail::last_deep_position(levels_)
                  : detail::first_subtree_end(levels_) - 1;
      if (!detail::bh_successor(levels_, p)) {
        finished_ = true;
        return;
      }
      if (detail::is_free_tree_representative(levels_)) return;
    }
  }

  bool matches_filter(const Tree& t) {
    if (!gamma_) return true;
    return domination_number(t).gamma == *gamma_;
  }

  int n_;
  std::optional<int> gamma_;
  std::vector<int> levels_;
  bool started_ = false;
  bool finished_ = false;
};

inline std::vector<Tree> enumerate_trees(int n, int cap = kDefaultEnumerationCap) {
  TreeStream stream(n, std::nullopt, cap);
  std::vector<Tree> trees;
  while (auto t = stream.next()) trees.push_back(std::move(*t));
  return trees;
}

inline std::vector<Tree> enumerate_trees_with_gamma(int n, int gamma,
                                                    int cap = kDefaultEnumerationCap) {
  TreeStream stream(n, gamma, cap);
  std::vector<Tree> trees;
  while (auto t = stream.next()) trees.push_back(std::move(*t));
  return trees;
}

inline long long count_trees(int n, int cap = kDefaultEnumerationCap) {
  TreeStream stream(n, std::nullopt, cap);
  long long count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace zagdom
