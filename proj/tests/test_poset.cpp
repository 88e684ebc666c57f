#include <doctest.h>

#include <vtutte/errors.hpp>
#include <vtutte/poset.hpp>
#include <vtutte/rooted_tree.hpp>

using namespace vtutte;

namespace {

// Strict orders on n labeled elements, counted over every subset of ordered
// pairs.
long long count_strict_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  long long count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (s >> k & 1) lt[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (lt[a][b] && lt[b][a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

Poset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}

} // namespace

TEST_SUITE("poset") {

TEST_CASE("parse and closure") {
  auto p = parse_poset("3\n1 2\n2 3\n");
  CHECK(p.size() == 3);
  CHECK(p.less(0, 2));
  CHECK(!p.less(2, 0));
  CHECK(p.covers().size() == 2);
  CHECK(p == chain(3));
  CHECK(parse_poset("# comment\n2\n\n1 2\n") == chain(2));
  CHECK(parse_poset("0\n").empty());
  CHECK(parse_poset(p.to_text()) == p);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poset("2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("two\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("2\n1\n"), ParseError);
  try {
    parse_poset("3\n1 2\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  std::vector<std::pair<std::size_t, std::size_t>> cyc{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Poset::from_covers(3, cyc), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_relation({singleton(1), singleton(0)}), std::invalid_argument);
  CHECK_NOTHROW(Poset::from_relation({singleton(1), 0}));
}

TEST_CASE("dual, induced, constructions") {
  auto c2 = chain(2);
  auto d = c2.dual();
  CHECK(d.less(1, 0));
  CHECK(d.dual() == c2);
  auto c3 = chain(3);
  CHECK(c3.induced(singleton(0) | singleton(2)) == c2);
  auto g = Poset(2).with_greatest();
  CHECK(g.size() == 3);
  CHECK(g.below(2) == (singleton(0) | singleton(1)));
  auto l = Poset(2).with_least();
  CHECK(l.above(2) == (singleton(0) | singleton(1)));
  std::vector<Poset> parts{c2, Poset(1)};
  auto u = Poset::disjoint_union(parts);
  CHECK(u.size() == 3);
  CHECK(u.less(0, 1));
  CHECK(u.incomparable(0, 2));
  CHECK(Poset().with_greatest() == Poset(1));
}

TEST_CASE("isomorphism") {
  CHECK(poset_isomorphic(chain(2), chain(2).dual()));
  CHECK(!poset_isomorphic(chain(2), Poset(2)));
  auto n = parse_poset("4\n3 1\n4 1\n4 2\n");
  auto bowtie = parse_poset("4\n3 1\n4 1\n3 2\n4 2\n");
  CHECK(!poset_isomorphic(n, bowtie));
  CHECK(poset_isomorphic(n, n.dual()));
  CHECK(poset_isomorphic(bowtie, bowtie.dual()));
  CHECK(!poset_isomorphic(Poset(2).with_greatest(), Poset(2).with_least()));
  CHECK_THROWS_AS(poset_isomorphic(Poset(9), Poset(9)), OracleBoundError);
}

TEST_CASE("labeled posets") {
  const long long known[] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long long>(enumerate_labeled_posets(n).size()) == known[n]);
  }
  for (std::size_t n = 0; n <= 4; ++n) CHECK(count_strict_orders(n) == known[n]);
  CHECK_THROWS_AS(enumerate_labeled_posets(7), OracleBoundError);
}

TEST_CASE("tree posets") {
  auto s3 = tree_to_poset(star_tree(3), TreeOrientation::root_greatest);
  CHECK(s3.size() == 3);
  CHECK(s3.below(0) == (singleton(1) | singleton(2)));
  auto p3 = tree_to_poset(path_tree(3), TreeOrientation::root_least);
  CHECK(p3 == chain(3));
  CHECK(tree_to_poset(RootedTree(), TreeOrientation::root_least) == Poset(1));
  auto t = parse_tree("((()())(()))");
  auto tp = tree_to_poset(t, TreeOrientation::root_greatest);
  CHECK(tp.covers().size() == 5);
}

} // TEST_SUITE
