#include <doctest.h>

#include <vtutte/errors.hpp>
#include <vtutte/rooted_tree.hpp>

#include "oracles.hpp"

using namespace vtutte;

namespace {

BivariatePoly poly(const char* s) { return BivariatePoly::parse(s); }

} // namespace

TEST_SUITE("rooted-tree") {

TEST_CASE("parse and canonical form") {
  auto t = parse_tree("((()())(()))");
  CHECK(t.size() == 6);
  CHECK(t.leaf_count() == 3);
  CHECK(t.children().size() == 2);
  CHECK(parse_tree(" ( (()) (()()) ) ") == t);
  CHECK(parse_tree(t.encoding()) == t);
  CHECK(parse_tree("()").is_leaf());
}

TEST_CASE("parse errors carry an offset") {
  for (const char* bad : {"", "(", "(()", "())", "()()", "(x)", ")("}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_tree(bad), ParseError);
  }
  try {
    parse_tree("(()x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("small trees") {
  CHECK(tree_poly(RootedTree()) == BivariatePoly::x());
  CHECK(tree_poly(parse_tree("(())")) == poly("x + y"));
  CHECK(tree_poly(parse_tree("(()())")) == poly("x^2 + y^2"));
  CHECK(tree_poly(parse_tree("((()))")) == poly("x + y + y^2"));
}

TEST_CASE("six-vertex tree") {
  auto t = parse_tree("((()())(()))");
  auto p = tree_poly(t);
  CHECK(p.to_string() == "y^5 + y^3 + x*y^2 + x^2*y + x^3");
  CHECK(p == poly("x^3+y^2*x+x^2*y+y^3+y^5"));
  CHECK(antichain_expansion_tree(t) == p);
  CHECK(tree_poly_dc(t) == p);
  CHECK(maximal_antichains_tree(t).size() == 5);
  CHECK(count_antichains_tree(t) == 16);
  CHECK(count_cutsets_tree(t) == 47);
  CHECK(p.eval(2, 1) == 16);
  CHECK(p.eval(1, 2) == 47);
}

TEST_CASE("stars and paths") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    auto sn = BivariatePoly::x().pow(static_cast<unsigned>(n - 1)) +
              BivariatePoly::y().pow(static_cast<unsigned>(n - 1));
    CHECK(tree_poly(star_tree(n)) == sn);
    BivariatePoly pn = BivariatePoly::x();
    for (unsigned k = 1; k < n; ++k) pn += BivariatePoly::y().pow(k);
    CHECK(tree_poly(path_tree(n)) == pn);
    CHECK(star_tree(n).size() == n);
    CHECK(path_tree(n).size() == n);
  }
  CHECK(star_tree(1) == RootedTree());
  CHECK(path_tree(1) == RootedTree());
}

TEST_CASE("root edge classification") {
  CHECK(classify_root_edge(parse_tree("(())"), 0) == RootEdgeKind::bridge);
  CHECK(classify_root_edge(parse_tree("((()))"), 0) == RootEdgeKind::bridge);
  auto t = parse_tree("(()(()))");
  REQUIRE(t.children()[0].encoding() == "(())");
  CHECK(classify_root_edge(t, 0) == RootEdgeKind::inner);
  CHECK(classify_root_edge(t, 1) == RootEdgeKind::pendant);
  CHECK(contract_root_edge(t, 0) == parse_tree("(()())"));
  CHECK(delete_branch(t, 0) == parse_tree("(())"));
  CHECK(contract_root_edge(t, 1) == parse_tree("((()))"));
  CHECK(contract_root_edge(parse_tree("(())"), 0) == RootedTree());
  CHECK_THROWS(classify_root_edge(RootedTree(), 0));
}

TEST_CASE("deletion-contraction examples") {
  auto s3 = star_tree(3);
  CHECK(deletion_contraction_rhs(s3, 0) == poly("x^2 + y^2"));
  auto p2 = path_tree(2);
  CHECK(deletion_contraction_rhs(p2, 0) == poly("x + y"));
  auto t = parse_tree("((()())(()))");
  for (std::size_t i = 0; i < t.children().size(); ++i)
    CHECK(deletion_contraction_rhs(t, i) == tree_poly(t));
}

TEST_CASE("partial collisions") {
  auto t1 = parse_tree("(((())(())(())))");
  auto t2 = parse_tree("(((()))(()(())))");
  auto t3 = parse_tree("((((())))())");
  auto t4 = parse_tree("((()())(()))");
  CHECK(tree_poly(t1).at_y(1) == poly("x^3+3*x^2+3*x+3"));
  CHECK(tree_poly(t2).at_y(1) == poly("x^3+3*x^2+3*x+3"));
  CHECK(tree_poly(t1) != tree_poly(t2));
  CHECK(tree_poly(t3).at_x(1) == poly("y^5+y^3+y^2+y+1"));
  CHECK(tree_poly(t4).at_x(1) == poly("y^5+y^3+y^2+y+1"));
  CHECK(tree_poly(t3) != tree_poly(t4));
}

TEST_CASE("enumeration counts") {
  auto a = oracle::rooted_tree_counts(12);
  CHECK(a[9] == 286);
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto trees = enumerate_rooted_trees(n);
    CHECK(trees.size() == static_cast<std::size_t>(a[n]));
    for (std::size_t i = 1; i < trees.size(); ++i) REQUIRE(trees[i - 1] < trees[i]);
    for (const auto& t : trees) REQUIRE(t.size() == n);
  }
  CHECK_THROWS_AS(enumerate_rooted_trees(13), OracleBoundError);
}

TEST_CASE("enumeration matches labeled generation") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    std::set<std::string> got;
    for (const auto& t : enumerate_rooted_trees(static_cast<std::size_t>(n)))
      got.insert(t.encoding());
    CHECK(got == oracle::unlabeled_trees(n));
  }
}

TEST_CASE("tree index") {
  auto idx = index_tree(parse_tree("((()())(()))"));
  CHECK(idx.size() == 6);
  CHECK(idx.parent[0] == -1);
  CHECK(idx.subtree_size[0] == 6);
  CHECK(idx.leaves().size() == 3);
}

TEST_CASE("oracle bounds") {
  auto big = star_tree(21);
  CHECK_THROWS_AS(count_antichains_tree(big), OracleBoundError);
  CHECK_THROWS_AS(count_cutsets_tree(big), OracleBoundError);
  CHECK(count_antichains_tree(big, 21) == (Integer(1) << 20) + 1);
  CHECK_THROWS_AS(index_tree(star_tree(65)), OracleBoundError);
}

} // TEST_SUITE
