#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zagdom/errors.hpp"

namespace zagdom {

using Edge = std::pair<int, int>;

// A tree on vertices 0..n-1, immutable after construction. Construction
// validates every invariant (n-1 edges, no loops/duplicates, connected), so
// holding a Tree is holding a proof that it is one.
class Tree {
 public:
  static Tree from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw EdgeCountMismatch("tree order must be >= 1, got " + std::to_string(n));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw IdOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside 0.." + std::to_string(n - 1));
      }
      if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
      auto& nbrs = adj[static_cast<std::size_t>(v)];
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw DuplicateEdge("duplicate edge at vertex " + std::to_string(v));
      }
    }
    // n-1 edges + connected <=> tree.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) throw Disconnected("only " + std::to_string(reached) + " of " +
                                         std::to_string(n) + " vertices reachable from 0");
    if (static_cast<int>(edges.size()) != n - 1) {
      throw EdgeCountMismatch("expected " + std::to_string(n - 1) + " edges, got " +
                              std::to_string(edges.size()));
    }
    return Tree(std::move(adj));
  }

  int order() const { return static_cast<int>(adj_.size()); }

  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  // Each undirected edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(adj_.empty() ? 0 : adj_.size() - 1);
    for (int u = 0; u < order(); ++u) {
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (u < v) result.emplace_back(u, v);
      }
    }
    return result;
  }

  bool operator==(const Tree& other) const { return adj_ == other.adj_; }

 private:
  explicit Tree(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

  std::vector<std::vector<int>> adj_;
};

// Degree -> number of vertices with that degree.
class DegreeMultiset {
 public:
  explicit DegreeMultiset(const Tree& t) {
    for (int v = 0; v < t.order(); ++v) ++counts_[t.degree(v)];
  }
  DegreeMultiset(std::initializer_list<std::pair<const int, int>> init) : counts_(init) {}
  explicit DegreeMultiset(std::map<int, int> counts) : counts_(std::move(counts)) {}

  int count(int degree) const {
    auto it = counts_.find(degree);
    return it == counts_.end() ? 0 : it->second;
  }
  int leaves() const { return count(1); }
  const std::map<int, int>& counts() const { return counts_; }

  bool operator==(const DegreeMultiset& other) const { return counts_ == other.counts_; }

 private:
  std::map<int, int> counts_;
};

inline DegreeMultiset degree_multiset(const Tree& t) { return DegreeMultiset(t); }

// --- edge-list text format ---------------------------------------------------
// Line 1: n. Then n-1 lines "u v" (0-based, whitespace separated). Lines
// starting with '#' are comments; blank lines are ignored.

inline Tree parse_edge_list(std::istream& in) {
  auto next_line = [&in](std::string& line) -> bool {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw ParseError("missing order line");
  int n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra)) throw ParseError("bad order line: \"" + line + "\"");
  }
  if (n < 1) throw ParseError("order must be >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i < n - 1; ++i) {
    if (!next_line(line)) {
      throw ParseError("expected " + std::to_string(n - 1) + " edges, file ends after " +
                       std::to_string(i));
    }
    std::istringstream ls(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("bad edge line: \"" + line + "\"");
    edges.emplace_back(u, v);
  }
  if (next_line(line)) throw ParseError("trailing content: \"" + line + "\"");
  try {
    return Tree::from_edge_list(n, edges);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

inline Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.order() << "\n";
  for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
  return out.str();
}

// --- parent-array format -----------------------------------------------------
// "n:p1,p2,...,p{n-1}" where p_i is the parent of vertex i. Requires every
// vertex i >= 1 to have a neighbor with a smaller id (true for trees labeled in
// preorder, as enumeration emits them).

inline std::vector<int> to_parent_array(const Tree& t) {
  std::vector<int> parents(static_cast<std::size_t>(t.order() > 0 ? t.order() - 1 : 0));
  for (int v = 1; v < t.order(); ++v) {
    int p = t.neighbors(v).front();  // adjacency sorted, so front() is min
    if (p >= v) {
      throw DomainError("vertex " + std::to_string(v) +
                        " has no smaller-id neighbor; tree is not preorder-labeled");
    }
    parents[static_cast<std::size_t>(v - 1)] = p;
  }
  return parents;
}

inline std::string to_parent_line(const Tree& t) {
  std::ostringstream out;
  out << t.order() << ":";
  auto parents = to_parent_array(t);
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i > 0) out << ",";
    out << parents[i];
  }
  return out.str();
}

inline Tree from_parent_array(int n, const std::vector<int>& parents) {
  if (static_cast<int>(parents.size()) != n - 1) {
    throw ParseError("parent array length " + std::to_string(parents.size()) +
                     " does not match order " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(parents.size());
  for (int v = 1; v < n; ++v) edges.emplace_back(parents[static_cast<std::size_t>(v - 1)], v);
  try {
    return Tree::from_edge_list(n, edges);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid parent array: ") + e.what());
  }
}

inline Tree parse_parent_line(const std::string& line) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("missing ':' in \"" + line + "\"");
  int n = 0;
  try {
    n = std::stoi(line.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad order in \"" + line + "\"");
  }
  std::vector<int> parents;
  std::string rest = line.substr(colon + 1);
  if (!rest.empty()) {
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        parents.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad parent token \"" + tok + "\"");
      }
    }
  }
  return from_parent_array(n, parents);
}

// --- convenience constructors used everywhere in tests and the harness -------

inline Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edge_list(n, edges);
}

inline Tree star_tree(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree::from_edge_list(n, edges);
}

// One branch vertex (id 0) with paths of the given lengths attached.
inline Tree spider_tree(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edge_list(next, edges);
}

}  // namespace zagdom
