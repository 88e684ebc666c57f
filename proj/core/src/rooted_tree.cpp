#include "vtutte/rooted_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <utility>

namespace vtutte {

RootedTree::RootedTree() = default;

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  if (children_.empty()) {
    return;
  }
  size_ = 1;
  leaf_count_ = 0;
  encoding_ = "(";
  for (const auto& child : children_) {
    size_ += child.size_;
    leaf_count_ += child.leaf_count_;
    encoding_ += child.encoding_;
  }
  encoding_ += ')';
}

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    skip_space();
    if (pos_ == text_.size()) {
      fail("empty input, expected '('");
    }
    RootedTree t = node();
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing characters after tree");
    }
    return t;
  }

private:
  RootedTree node() {
    if (peek() != '(') {
      fail("expected '('");
    }
    ++pos_;
    std::vector<RootedTree> children;
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) {
        fail("unbalanced parentheses, expected ')'");
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      children.push_back(node());
    }
    return RootedTree(std::move(children));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

RootedTree star_tree(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("star_tree: n must be positive");
  }
  return RootedTree(std::vector<RootedTree>(n - 1));
}

RootedTree path_tree(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("path_tree: n must be positive");
  }
  RootedTree t;
  for (std::size_t i = 1; i < n; ++i) {
    t = RootedTree(std::vector<RootedTree>{std::move(t)});
  }
  return t;
}

namespace {

BivariatePoly y_power(std::size_t exp) {
  return BivariatePoly::monomial(1, 0, static_cast<unsigned>(exp));
}

} // namespace

BivariatePoly tree_poly(const RootedTree& t) {
  if (t.is_leaf()) {
    return BivariatePoly::x();
  }
  BivariatePoly product = BivariatePoly::one();
  for (const auto& branch : t.children()) {
    product *= tree_poly(branch);
  }
  return product + y_power(t.size() - 1);
}

RootEdgeKind classify_root_edge(const RootedTree& t, std::size_t child) {
  if (child >= t.children().size()) {
    throw std::out_of_range("classify_root_edge: no such root edge");
  }
  if (t.children().size() == 1) {
    return RootEdgeKind::bridge;
  }
  if (t.children()[child].is_leaf()) {
    return RootEdgeKind::pendant;
  }
  return RootEdgeKind::inner;
}

RootedTree contract_root_edge(const RootedTree& t, std::size_t child) {
  if (child >= t.children().size()) {
    throw std::out_of_range("contract_root_edge: no such root edge");
  }
  std::vector<RootedTree> merged;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i == child) {
      const auto& grand = t.children()[i].children();
      merged.insert(merged.end(), grand.begin(), grand.end());
    } else {
      merged.push_back(t.children()[i]);
    }
  }
  return RootedTree(std::move(merged));
}

RootedTree delete_branch(const RootedTree& t, std::size_t child) {
  if (child >= t.children().size()) {
    throw std::out_of_range("delete_branch: no such root edge");
  }
  if (t.children().size() < 2) {
    throw std::invalid_argument("delete_branch: removing the only branch leaves no root edge");
  }
  std::vector<RootedTree> rest;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i != child) {
      rest.push_back(t.children()[i]);
    }
  }
  return RootedTree(std::move(rest));
}

namespace {

// One application of the deletion-contraction identity; `eval` computes the
// polynomial of the smaller trees.
BivariatePoly apply_deletion_contraction(
    const RootedTree& t, std::size_t child,
    const std::function<BivariatePoly(const RootedTree&)>& eval) {
  const std::size_t n = t.size();
  const RootedTree contracted = contract_root_edge(t, child);
  switch (classify_root_edge(t, child)) {
  case RootEdgeKind::bridge:
    return eval(contracted) + y_power(n - 1);
  case RootEdgeKind::pendant:
    return BivariatePoly::x() * eval(contracted) -
           BivariatePoly::monomial(1, 1, static_cast<unsigned>(n - 2)) + y_power(n - 1);
  case RootEdgeKind::inner: {
    const std::size_t branch_size = t.children()[child].size();
    return eval(contracted) + y_power(branch_size - 1) * eval(delete_branch(t, child)) -
           BivariatePoly::monomial(2, 0, static_cast<unsigned>(n - 2)) + y_power(n - 1);
  }
  }
  throw ConsistencyError("apply_deletion_contraction: unknown edge kind");
}

} // namespace

BivariatePoly deletion_contraction_rhs(const RootedTree& t, std::size_t child) {
  return apply_deletion_contraction(t, child, [](const RootedTree& s) { return tree_poly(s); });
}

BivariatePoly tree_poly_dc(const RootedTree& t) {
  if (t.is_leaf()) {
    return BivariatePoly::x();
  }
  return apply_deletion_contraction(t, 0, [](const RootedTree& s) { return tree_poly_dc(s); });
}

// ---------------------------------------------------------------------------

namespace {

// Appends to `out` every tree formed by attaching to a root a multiset of
// branches of total size `remaining`, branches drawn in nondecreasing
// (size, index) order so each multiset appears once.
void attach_branches(const std::vector<std::vector<RootedTree>>& by_size, std::size_t remaining,
                     std::size_t min_size, std::size_t min_index,
                     std::vector<RootedTree>& branches, std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.emplace_back(branches);
    return;
  }
  for (std::size_t s = min_size; s <= remaining; ++s) {
    const auto& pool = by_size[s];
    for (std::size_t i = (s == min_size ? min_index : 0); i < pool.size(); ++i) {
      branches.push_back(pool[i]);
      attach_branches(by_size, remaining - s, s, i, branches, out);
      branches.pop_back();
    }
  }
}

} // namespace

std::vector<RootedTree> enumerate_rooted_trees(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("enumerate_rooted_trees: n must be positive");
  }
  if (n > max_enumerated_tree_size) {
    throw OracleBoundError("enumerate_rooted_trees", n, max_enumerated_tree_size);
  }
  std::vector<std::vector<RootedTree>> by_size(n + 1);
  by_size[1].emplace_back();
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<RootedTree> branches;
    attach_branches(by_size, k - 1, 1, 0, branches, by_size[k]);
    std::sort(by_size[k].begin(), by_size[k].end());
  }
  return by_size[n];
}

std::size_t CollisionReport::pair_count(const std::vector<std::vector<RootedTree>>& classes) {
  std::size_t pairs = 0;
  for (const auto& cls : classes) {
    pairs += cls.size() * (cls.size() - 1) / 2;
  }
  return pairs;
}

namespace {

std::vector<std::vector<RootedTree>> collect_classes(
    std::map<std::string, std::vector<RootedTree>>& groups) {
  std::vector<std::vector<RootedTree>> out;
  for (auto& [key, members] : groups) {
    if (members.size() >= 2) {
      out.push_back(std::move(members));
    }
  }
  return out;
}

} // namespace

CollisionReport collision_search(std::size_t max_vertices) {
  if (max_vertices > max_enumerated_tree_size) {
    throw OracleBoundError("collision_search", max_vertices, max_enumerated_tree_size);
  }
  std::map<std::string, std::vector<RootedTree>> full;
  std::map<std::string, std::vector<RootedTree>> at_y_one;
  std::map<std::string, std::vector<RootedTree>> at_x_one;

  CollisionReport report;
  report.max_vertices = max_vertices;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (auto& t : enumerate_rooted_trees(n)) {
      const BivariatePoly p = tree_poly(t);
      full[p.to_string()].push_back(t);
      at_y_one[p.at_y(1).to_string()].push_back(t);
      at_x_one[p.at_x(1).to_string()].push_back(t);
      ++report.trees_examined;
    }
  }
  report.full = collect_classes(full);
  report.at_y_one = collect_classes(at_y_one);
  report.at_x_one = collect_classes(at_x_one);
  return report;
}

} // namespace vtutte
