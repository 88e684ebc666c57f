#include <doctest.h>

#include <vtutte/rooted_tree.hpp>

#include "oracles.hpp"

using namespace vtutte;

TEST_SUITE("rooted-tree") {

TEST_CASE("branch recursion equals the antichain expansion, n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      CAPTURE(t.encoding());
      REQUIRE(antichain_expansion_tree(t) == tree_poly(t));
    }
}

TEST_CASE("antichain expansion against subset scan, n <= 9") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      CAPTURE(t.encoding());
      REQUIRE(oracle::antichain_sum(oracle::parse_parents(t.encoding())) == tree_poly(t));
    }
}

TEST_CASE("deletion-contraction at every root edge, n <= 9") {
  std::size_t edges = 0;
  for (std::size_t n = 2; n <= 9; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      CAPTURE(t.encoding());
      const auto p = tree_poly(t);
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        REQUIRE(deletion_contraction_rhs(t, i) == p);
        ++edges;
      }
      REQUIRE(tree_poly_dc(t) == p);
    }
  CHECK(edges > 0);
}

TEST_CASE("six evaluations, n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      CAPTURE(t.encoding());
      const auto p = tree_poly(t);
      const auto par = oracle::parse_parents(t.encoding());
      REQUIRE(p.eval(1, 1) == count_maximal_antichains_tree(t));
      REQUIRE(p.eval(1, 1) == Integer(static_cast<unsigned long>(maximal_antichains_tree(t).size())));
      REQUIRE(p.at_y(0) == BivariatePoly::monomial(1, static_cast<unsigned>(t.leaf_count()), 0));
      REQUIRE(p.eval(0, 1) == count_maximal_antichains_no_leaf_tree(t));
      REQUIRE(p.eval(2, 1) == count_antichains_tree(t));
      REQUIRE(p.eval(2, 1) == count_root_subtrees(t));
      REQUIRE(p.eval(2, 1) == static_cast<long>(oracle::antichain_count(par)));
      REQUIRE(p.eval(1, 2) == count_cutsets_tree(t));
      REQUIRE(p.eval(1, 2) == static_cast<long>(oracle::cutset_count(par)));
      REQUIRE(p.eval(2, 2) == Integer(1) << static_cast<mp_bitcnt_t>(n));
    }
}

TEST_CASE("collision search") {
  auto r = collision_search(8);
  std::size_t total = 0;
  auto a = oracle::rooted_tree_counts(8);
  for (int n = 1; n <= 8; ++n) total += static_cast<std::size_t>(a[static_cast<std::size_t>(n)]);
  CHECK(r.trees_examined == total);
  CHECK(r.max_vertices == 8);
  for (const auto* classes : {&r.full, &r.at_y_one, &r.at_x_one})
    for (const auto& cls : *classes) {
      REQUIRE(cls.size() >= 2);
      for (std::size_t i = 1; i < cls.size(); ++i) REQUIRE(!(cls[i] == cls[0]));
    }
  for (const auto& cls : r.at_y_one)
    for (const auto& t : cls) REQUIRE(tree_poly(t).at_y(1) == tree_poly(cls[0]).at_y(1));
  CHECK(CollisionReport::pair_count({{RootedTree(), path_tree(2), star_tree(3)}}) == 3);
  auto t1 = parse_tree("(((())(())(())))");
  auto t2 = parse_tree("(((()))(()(())))");
  bool found = false;
  for (const auto& cls : r.at_y_one)
    if (std::find(cls.begin(), cls.end(), t1) != cls.end() &&
        std::find(cls.begin(), cls.end(), t2) != cls.end())
      found = true;
  CHECK(found);
}

} // TEST_SUITE
