#include <algorithm>
#include <bit>

#include "vtutte/rooted_tree.hpp"

namespace vtutte {

std::vector<int> TreeIndex::leaves() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (children[v].empty()) {
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

namespace {

int index_subtree(const RootedTree& t, int parent, TreeIndex& idx) {
  const int v = static_cast<int>(idx.parent.size());
  idx.parent.push_back(parent);
  idx.children.emplace_back();
  idx.subtree_size.push_back(t.size());
  idx.ancestors.push_back(parent < 0 ? 0
                                     : idx.ancestors[static_cast<std::size_t>(parent)] |
                                           (std::uint64_t{1} << parent));
  for (const auto& child : t.children()) {
    const int c = index_subtree(child, v, idx);
    idx.children[static_cast<std::size_t>(v)].push_back(c);
  }
  return v;
}

void generate_antichains(const TreeIndex& idx, std::vector<int>& pending, std::vector<int>& chosen,
                         std::vector<TreeAntichain>& out) {
  if (pending.empty()) {
    TreeAntichain a;
    a.vertices = chosen;
    std::sort(a.vertices.begin(), a.vertices.end());
    for (int v : a.vertices) {
      if (idx.is_leaf(v)) {
        ++a.leaves;
      }
      a.below += idx.subtree_size[static_cast<std::size_t>(v)] - 1;
    }
    out.push_back(std::move(a));
    return;
  }
  const int v = pending.back();
  pending.pop_back();

  chosen.push_back(v);
  generate_antichains(idx, pending, chosen, out);
  chosen.pop_back();

  // Otherwise every root path through v must be cut strictly below v.
  const auto& kids = idx.children[static_cast<std::size_t>(v)];
  if (!kids.empty()) {
    pending.insert(pending.end(), kids.begin(), kids.end());
    generate_antichains(idx, pending, chosen, out);
    pending.resize(pending.size() - kids.size());
  }
  pending.push_back(v);
}

void require_bound(const char* op, const RootedTree& t, std::size_t bound) {
  const std::size_t effective = std::min<std::size_t>(bound, 62);
  if (t.size() > effective) {
    throw OracleBoundError(op, t.size(), effective);
  }
}

bool is_antichain(const TreeIndex& idx, std::uint64_t set) {
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((idx.ancestors[static_cast<std::size_t>(v)] & set) != 0) {
      return false;
    }
  }
  return true;
}

bool is_maximal_antichain(const TreeIndex& idx, std::uint64_t set) {
  if (!is_antichain(idx, set)) {
    return false;
  }
  for (std::size_t v = 0; v < idx.size(); ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((set & bit) == 0 && is_antichain(idx, set | bit)) {
      return false;
    }
  }
  return true;
}

template <typename Pred>
Integer count_subsets(const TreeIndex& idx, Pred&& pred) {
  const std::uint64_t limit = std::uint64_t{1} << idx.size();
  unsigned long count = 0;
  for (std::uint64_t set = 0; set < limit; ++set) {
    if (pred(set)) {
      ++count;
    }
  }
  return Integer(count);
}

} // namespace

TreeIndex index_tree(const RootedTree& t) {
  if (t.size() > max_indexed_tree_size) {
    throw OracleBoundError("index_tree", t.size(), max_indexed_tree_size);
  }
  TreeIndex idx;
  index_subtree(t, -1, idx);
  return idx;
}

std::vector<TreeAntichain> maximal_antichains_tree(const RootedTree& t) {
  const TreeIndex idx = index_tree(t);
  std::vector<TreeAntichain> out;
  std::vector<int> pending{0};
  std::vector<int> chosen;
  generate_antichains(idx, pending, chosen, out);
  return out;
}

BivariatePoly antichain_expansion_tree(const RootedTree& t) {
  BivariatePoly sum;
  for (const auto& a : maximal_antichains_tree(t)) {
    sum += BivariatePoly::monomial(1, static_cast<unsigned>(a.leaves),
                                   static_cast<unsigned>(a.below));
  }
  return sum;
}

Integer count_antichains_tree(const RootedTree& t, std::size_t bound) {
  require_bound("count_antichains_tree", t, bound);
  const TreeIndex idx = index_tree(t);
  return count_subsets(idx, [&](std::uint64_t set) { return is_antichain(idx, set); });
}

Integer count_cutsets_tree(const RootedTree& t, std::size_t bound) {
  require_bound("count_cutsets_tree", t, bound);
  const TreeIndex idx = index_tree(t);
  std::vector<std::uint64_t> paths;
  for (int leaf : idx.leaves()) {
    paths.push_back(idx.ancestors[static_cast<std::size_t>(leaf)] | (std::uint64_t{1} << leaf));
  }
  return count_subsets(idx, [&](std::uint64_t set) {
    return std::all_of(paths.begin(), paths.end(),
                       [set](std::uint64_t path) { return (path & set) != 0; });
  });
}

Integer count_maximal_antichains_tree(const RootedTree& t, std::size_t bound) {
  require_bound("count_maximal_antichains_tree", t, bound);
  const TreeIndex idx = index_tree(t);
  return count_subsets(idx, [&](std::uint64_t set) { return is_maximal_antichain(idx, set); });
}

Integer count_maximal_antichains_no_leaf_tree(const RootedTree& t, std::size_t bound) {
  require_bound("count_maximal_antichains_no_leaf_tree", t, bound);
  const TreeIndex idx = index_tree(t);
  std::uint64_t leaf_mask = 0;
  for (int leaf : idx.leaves()) {
    leaf_mask |= std::uint64_t{1} << leaf;
  }
  return count_subsets(idx, [&](std::uint64_t set) {
    return (set & leaf_mask) == 0 && is_maximal_antichain(idx, set);
  });
}

Integer count_root_subtrees(const RootedTree& t, std::size_t bound) {
  require_bound("count_root_subtrees", t, bound);
  const TreeIndex idx = index_tree(t);
  Integer nonempty = count_subsets(idx, [&](std::uint64_t set) {
    if ((set & 1U) == 0) {
      return false;
    }
    for (std::uint64_t rest = set & ~std::uint64_t{1}; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((set & (std::uint64_t{1} << idx.parent[static_cast<std::size_t>(v)])) == 0) {
        return false;
      }
    }
    return true;
  });
  return nonempty + 1;
}

} // namespace vtutte
