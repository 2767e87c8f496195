#include "zagdom/canonical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "zagdom/enumerate.hpp"
#include "zagdom/tree.hpp"

namespace zagdom {
namespace {

Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return Tree::from_edge_list(t.order(), edges);
}

TEST(TreeCenters, KnownCenters) {
  EXPECT_EQ(tree_centers(path_tree(5)), (std::vector<int>{2}));
  EXPECT_EQ(tree_centers(path_tree(4)), (std::vector<int>{1, 2}));
  EXPECT_EQ(tree_centers(star_tree(8)), (std::vector<int>{0}));
  EXPECT_EQ(tree_centers(path_tree(2)), (std::vector<int>{0, 1}));
  EXPECT_EQ(tree_centers(Tree::from_edge_list(1, {})), (std::vector<int>{0}));
  EXPECT_EQ(tree_centers(spider_tree({2, 2, 1})), (std::vector<int>{0}));
}

TEST(CanonicalCode, RelabeledPathsAgree) {
  Tree a = path_tree(4);                                    // 0-1-2-3
  Tree b = Tree::from_edge_list(4, {{3, 0}, {0, 2}, {2, 1}});  // 3-0-2-1
  EXPECT_EQ(canonical_code(a), canonical_code(b));
}

TEST(CanonicalCode, PathAndStarDiffer) {
  EXPECT_NE(canonical_code(path_tree(4)), canonical_code(star_tree(4)));
}

TEST(CanonicalCode, SameDegreesDifferentShape) {
  // Both have degree multiset {3:1, 2:2, 1:3}; the branch vertex has one leaf
  // neighbor in the spider and two in the caterpillar.
  Tree spider = spider_tree({2, 2, 1});
  Tree caterpillar = Tree::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}});
  EXPECT_EQ(degree_multiset(spider), degree_multiset(caterpillar));
  EXPECT_NE(canonical_code(spider), canonical_code(caterpillar));
}

TEST(CanonicalCode, InvariantUnderRandomRelabelings) {
  std::mt19937_64 rng(987123);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);  // up to 16
    Tree t = oracles::random_labeled_tree(n, rng);
    CanonicalCode code = canonical_code(t);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_code(relabel(t, perm)), code);
  }
}

TEST(IsIsomorphic, BasicPairs) {
  Tree p5 = path_tree(5);
  Tree p5_relabeled = Tree::from_edge_list(5, {{4, 2}, {2, 0}, {0, 3}, {3, 1}});
  EXPECT_TRUE(is_isomorphic(p5, p5_relabeled));
  // T(5,2) is the spider with legs (2,1,1); its degree-3 vertex rules out P_5.
  EXPECT_FALSE(is_isomorphic(p5, spider_tree({2, 1, 1})));
  EXPECT_TRUE(is_isomorphic(star_tree(4), star_tree(4)));
}

TEST(IsIsomorphic, AgreesWithPermutationOracleOnAllPairs) {
  std::vector<Tree> trees;
  for (int n = 1; n <= 7; ++n) {
    for (Tree& t : enumerate_trees(n)) trees.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) {
      ASSERT_EQ(is_isomorphic(trees[i], trees[j]),
                oracles::permutation_isomorphic(trees[i], trees[j]))
          << "pair " << i << "," << j;
    }
  }
}

TEST(IsIsomorphic, RelabeledEnumeratedTreesMatch) {
  std::mt19937_64 rng(5150);
  for (const Tree& t : enumerate_trees(8)) {
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_TRUE(is_isomorphic(t, relabel(t, perm)));
  }
}

TEST(PackedOracleCode, MatchesStringCode) {
  // The test oracle's bit-packed canonicalizer and the library code must
  // induce the same partition into isomorphism classes.
  for (int n = 1; n <= 9; ++n) {
    auto trees = enumerate_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        ASSERT_EQ(canonical_code(trees[i]) == canonical_code(trees[j]),
                  oracles::packed_canonical_code(trees[i]) ==
                      oracles::packed_canonical_code(trees[j]));
      }
    }
  }
}

}  // namespace
}  // namespace zagdom
