#ifndef VTUTTE_POSET_HPP
#define VTUTTE_POSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtutte/errors.hpp"

namespace vtutte {

class RootedTree;

/// Set of poset elements as a bit mask; element i is bit i.
using ElementSet = std::uint64_t;

inline constexpr ElementSet singleton(std::size_t e) { return ElementSet{1} << e; }
inline constexpr bool contains(ElementSet s, std::size_t e) { return (s >> e) & 1U; }
inline std::size_t cardinality(ElementSet s) { return static_cast<std::size_t>(std::popcount(s)); }

/// Calls f(e) for each element of s in ascending order.
template <typename F>
void for_each_element(ElementSet s, F&& f) {
  for (; s != 0; s &= s - 1) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
  }
}

std::vector<std::size_t> elements_of(ElementSet s);

/// Finite poset on elements 0..n-1 with a transitively closed strict order,
/// stored row-wise as bit masks. Immutable once built.
class Poset {
public:
  static constexpr std::size_t max_size = 64;

  /// Empty poset.
  Poset() = default;
  /// n pairwise incomparable elements.
  explicit Poset(std::size_t n);

  /// Closes the cover relations (u, v), meaning u < v, 0-based. Throws
  /// std::invalid_argument on out-of-range indices, self-relations or cycles.
  static Poset from_covers(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> covers);

  /// `above[u]` must already be the full set of elements greater than u.
  /// Throws std::invalid_argument unless the relation is a strict order.
  static Poset from_relation(std::vector<ElementSet> above);

  std::size_t size() const noexcept { return above_.size(); }
  bool empty() const noexcept { return above_.empty(); }
  ElementSet all() const noexcept {
    return size() == max_size ? ~ElementSet{0} : singleton(size()) - 1;
  }

  bool less(std::size_t u, std::size_t v) const { return contains(above_[u], v); }
  bool comparable(std::size_t u, std::size_t v) const { return contains(above_[u] | below_[u], v); }
  bool incomparable(std::size_t u, std::size_t v) const { return u != v && !comparable(u, v); }

  /// Elements strictly greater than u.
  ElementSet above(std::size_t u) const { return above_[u]; }
  /// Elements strictly less than u.
  ElementSet below(std::size_t u) const { return below_[u]; }
  ElementSet comparable_to(std::size_t u) const { return above_[u] | below_[u]; }

  /// Cover relations (u, v) with u < v and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  Poset dual() const;
  /// Restriction to `subset`, elements renumbered in ascending order.
  Poset induced(ElementSet subset) const;
  Poset with_greatest() const;
  Poset with_least() const;
  static Poset disjoint_union(std::span<const Poset> parts);

  /// Text form readable by `parse_poset`: "n" then 1-indexed cover lines.
  std::string to_text() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.above_ == b.above_; }

private:
  void fill_below();

  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
};

/// Line 1: element count n; each further non-blank line "u v" declares the
/// cover relation u < v (1-indexed). Lines starting with '#' are comments.
/// Throws ParseError whose position() is the 1-based line number.
Poset parse_poset(std::string_view text);

inline constexpr std::size_t max_isomorphism_size = 8;

/// Exhaustive search for an order isomorphism, pruned by per-element
/// (|below|, |above|) signatures.
bool poset_isomorphic(const Poset& p, const Poset& q,
                      std::size_t bound = max_isomorphism_size);

/// Permutation-invariant summary used to bucket posets before isomorphism
/// tests: sorted (|below|, |above|) pairs.
std::vector<std::pair<std::size_t, std::size_t>> poset_signature(const Poset& p);

inline constexpr std::size_t max_labeled_enumeration_size = 6;

/// All strict orders on {0..n-1}, n <= 6 (4231 posets for n = 5).
std::vector<Poset> enumerate_labeled_posets(std::size_t n);

enum class TreeOrientation { root_greatest, root_least };

/// Poset whose Hasse diagram is the tree; elements numbered in the tree's
/// preorder, so the root is element 0.
Poset tree_to_poset(const RootedTree& t, TreeOrientation orientation);

} // namespace vtutte

#endif // VTUTTE_POSET_HPP
