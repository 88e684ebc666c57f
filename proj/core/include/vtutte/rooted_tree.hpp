#ifndef VTUTTE_ROOTED_TREE_HPP
#define VTUTTE_ROOTED_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vtutte/bivariate_poly.hpp"
#include "vtutte/errors.hpp"

namespace vtutte {

/// Unordered rooted tree. Children are kept sorted by their canonical
/// encoding, so two isomorphic trees have identical internal form and
/// compare equal.
class RootedTree {
public:
  /// The single-vertex tree.
  RootedTree();
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const noexcept { return children_; }
  bool is_leaf() const noexcept { return children_.empty(); }
  std::size_t size() const noexcept { return size_; }
  std::size_t leaf_count() const noexcept { return leaf_count_; }

  /// Canonical parenthesis string; also the text format accepted by
  /// `parse_tree`.
  const std::string& encoding() const noexcept { return encoding_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.encoding_ == b.encoding_;
  }
  friend bool operator<(const RootedTree& a, const RootedTree& b) {
    return a.encoding_ < b.encoding_;
  }

private:
  std::vector<RootedTree> children_;
  std::size_t size_ = 1;
  std::size_t leaf_count_ = 1;
  std::string encoding_ = "()";
};

/// tree ::= "(" tree* ")", whitespace ignored. Throws ParseError carrying
/// the offending character offset.
RootedTree parse_tree(std::string_view text);

/// Star on n vertices rooted at its centre.
RootedTree star_tree(std::size_t n);
/// Path on n vertices rooted at an endpoint.
RootedTree path_tree(std::size_t n);

// ---------------------------------------------------------------------------
// Polynomial

/// Branch recursion: x for a single vertex, otherwise the product over the
/// root's branches plus y^(|T|-1).
BivariatePoly tree_poly(const RootedTree& t);

enum class RootEdgeKind { bridge, pendant, inner };

/// Classification of the edge from the root to its child `child`. An edge is
/// a bridge when it is the only root edge; that takes precedence over
/// pendant (child is a leaf).
RootEdgeKind classify_root_edge(const RootedTree& t, std::size_t child);

/// T/e: the root absorbs `child`, inheriting its branches.
RootedTree contract_root_edge(const RootedTree& t, std::size_t child);

/// T \ T_i: the branch hanging from `child` is removed. Requires at least two
/// root edges.
RootedTree delete_branch(const RootedTree& t, std::size_t child);

/// Right-hand side of the deletion-contraction identity for the root edge to
/// `child`, with the smaller trees evaluated by `tree_poly`.
BivariatePoly deletion_contraction_rhs(const RootedTree& t, std::size_t child);

/// Same polynomial as `tree_poly`, obtained by applying deletion-contraction
/// on the first root edge all the way down to single vertices.
BivariatePoly tree_poly_dc(const RootedTree& t);

// ---------------------------------------------------------------------------
// Vertex indexing and antichains

/// Preorder (DFS) numbering of a tree's vertices; vertex 0 is the root and
/// children are visited in canonical order.
struct TreeIndex {
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;
  std::vector<std::size_t> subtree_size;   // |T_a|
  std::vector<std::uint64_t> ancestors;    // strict ancestors, as bit masks

  std::size_t size() const noexcept { return parent.size(); }
  bool is_leaf(int v) const { return children[static_cast<std::size_t>(v)].empty(); }
  std::vector<int> leaves() const;
};

inline constexpr std::size_t max_indexed_tree_size = 64;

/// Throws OracleBoundError beyond 64 vertices.
TreeIndex index_tree(const RootedTree& t);

struct TreeAntichain {
  std::vector<int> vertices;  // preorder indices, ascending
  std::size_t leaves = 0;     // l(A)
  std::size_t below = 0;      // s(A), total number of successors
};

/// Every maximal antichain exactly once. A maximal antichain either is the
/// root alone or picks one maximal antichain in each branch.
std::vector<TreeAntichain> maximal_antichains_tree(const RootedTree& t);

/// Sum over maximal antichains A of x^l(A) y^s(A).
BivariatePoly antichain_expansion_tree(const RootedTree& t);

// Brute-force counts over all vertex subsets. They refuse trees above
// `bound` vertices.
Integer count_antichains_tree(const RootedTree& t, std::size_t bound = default_oracle_bound);
Integer count_cutsets_tree(const RootedTree& t, std::size_t bound = default_oracle_bound);
Integer count_maximal_antichains_tree(const RootedTree& t,
                                      std::size_t bound = default_oracle_bound);
Integer count_maximal_antichains_no_leaf_tree(const RootedTree& t,
                                              std::size_t bound = default_oracle_bound);
/// Root-containing subtrees plus one for the empty subtree, which pairs with
/// the empty antichain.
Integer count_root_subtrees(const RootedTree& t, std::size_t bound = default_oracle_bound);

// ---------------------------------------------------------------------------
// Exhaustive generation

inline constexpr std::size_t max_enumerated_tree_size = 12;

/// All unlabeled rooted trees on n vertices, one per isomorphism class, in
/// ascending canonical order.
std::vector<RootedTree> enumerate_rooted_trees(std::size_t n);

struct CollisionReport {
  std::size_t max_vertices = 0;
  std::size_t trees_examined = 0;
  /// Classes (size >= 2) of non-isomorphic trees sharing the full polynomial.
  std::vector<std::vector<RootedTree>> full;
  /// Classes sharing P(T; x, 1).
  std::vector<std::vector<RootedTree>> at_y_one;
  /// Classes sharing P(T; 1, y).
  std::vector<std::vector<RootedTree>> at_x_one;

  static std::size_t pair_count(const std::vector<std::vector<RootedTree>>& classes);
};

/// Groups all trees with at most `max_vertices` vertices by polynomial.
CollisionReport collision_search(std::size_t max_vertices);

} // namespace vtutte

#endif // VTUTTE_ROOTED_TREE_HPP
