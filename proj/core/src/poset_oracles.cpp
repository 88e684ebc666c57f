#include <algorithm>
#include <functional>

#include "vtutte/vposet.hpp"

namespace vtutte {

namespace {

void require_bound(const char* op, const Poset& p, std::size_t bound) {
  const std::size_t effective = std::min<std::size_t>(bound, 62);
  if (p.size() > effective) {
    throw OracleBoundError(op, p.size(), effective);
  }
}

bool is_antichain(const Poset& p, ElementSet s) {
  bool ok = true;
  for_each_element(s, [&](std::size_t e) {
    if ((p.comparable_to(e) & s) != 0) {
      ok = false;
    }
  });
  return ok;
}

bool is_maximal_antichain(const Poset& p, ElementSet s) {
  if (!is_antichain(p, s)) {
    return false;
  }
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (!contains(s, e) && is_antichain(p, s | singleton(e))) {
      return false;
    }
  }
  return true;
}

bool meets_all(const std::vector<ElementSet>& chains, ElementSet s) {
  return std::all_of(chains.begin(), chains.end(), [s](ElementSet c) { return (c & s) != 0; });
}

template <typename Pred>
Integer count_subsets(const Poset& p, Pred&& pred) {
  const ElementSet limit = singleton(p.size());
  unsigned long count = 0;
  for (ElementSet s = 0; s < limit; ++s) {
    if (pred(s)) {
      ++count;
    }
  }
  return Integer(count);
}

} // namespace

Integer count_antichains_poset(const Poset& p, std::size_t bound) {
  require_bound("count_antichains_poset", p, bound);
  return count_subsets(p, [&](ElementSet s) { return is_antichain(p, s); });
}

std::vector<ElementSet> maximal_chains(const Poset& p, std::size_t bound) {
  require_bound("maximal_chains", p, bound);
  std::vector<ElementSet> up_covers(p.size(), 0);
  for (const auto& [u, v] : p.covers()) {
    up_covers[u] |= singleton(v);
  }
  std::vector<ElementSet> chains;
  std::function<void(std::size_t, ElementSet)> walk = [&](std::size_t e, ElementSet chain) {
    chain |= singleton(e);
    if (up_covers[e] == 0) {
      chains.push_back(chain);
      return;
    }
    for_each_element(up_covers[e], [&](std::size_t next) { walk(next, chain); });
  };
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p.below(e) == 0) {
      walk(e, 0);
    }
  }
  return chains;
}

Integer count_cutsets_poset(const Poset& p, std::size_t bound) {
  require_bound("count_cutsets_poset", p, bound);
  const auto chains = maximal_chains(p, bound);
  return count_subsets(p, [&](ElementSet s) { return meets_all(chains, s); });
}

Integer count_maximal_antichains_poset(const Poset& p, std::size_t bound) {
  require_bound("count_maximal_antichains_poset", p, bound);
  return count_subsets(p, [&](ElementSet s) { return is_maximal_antichain(p, s); });
}

Integer count_maximal_antichains_no_basic(const Poset& p, std::size_t bound) {
  require_bound("count_maximal_antichains_no_basic", p, bound);
  const ElementSet basic = basic_elements(p);
  return count_subsets(p, [&](ElementSet s) {
    return (s & basic) == 0 && is_maximal_antichain(p, s);
  });
}

std::vector<ElementSet> minimal_cutsets(const Poset& p, std::size_t bound) {
  require_bound("minimal_cutsets", p, bound);
  const auto chains = maximal_chains(p, bound);
  std::vector<ElementSet> out;
  const ElementSet limit = singleton(p.size());
  for (ElementSet s = 0; s < limit; ++s) {
    if (!meets_all(chains, s)) {
      continue;
    }
    bool minimal = true;
    for_each_element(s, [&](std::size_t e) {
      if (minimal && meets_all(chains, s & ~singleton(e))) {
        minimal = false;
      }
    });
    if (minimal) {
      out.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

unsigned floor_log2(unsigned v) {
  unsigned r = 0;
  while (v > 1) {
    v >>= 1U;
    ++r;
  }
  return r;
}

class MonomialSumSearch {
public:
  explicit MonomialSumSearch(const EvaluationTargets& t)
      : targets_(t), max_a_(floor_log2(t.antichains)), max_b_(floor_log2(t.cutsets)) {}

  std::optional<BivariatePoly> run() {
    if (targets_.antichains == 0 || targets_.cutsets == 0 || targets_.power == 0) {
      return std::nullopt;
    }
    if (search(0, 0, 0, 0, 0, 0)) {
      BivariatePoly p;
      for (const auto& [a, b] : chosen_) {
        p += BivariatePoly::monomial(1, a, b);
      }
      return p;
    }
    return std::nullopt;
  }

private:
  // Monomials are chosen in nondecreasing (a, b) order so every multiset is
  // visited once.
  bool search(unsigned count, unsigned min_a, unsigned min_b, unsigned long at21,
              unsigned long at12, unsigned long at22) {
    if (count == targets_.maximal_antichains) {
      return at21 == targets_.antichains && at12 == targets_.cutsets && at22 == targets_.power;
    }
    for (unsigned a = min_a; a <= max_a_; ++a) {
      for (unsigned b = (a == min_a ? min_b : 0); b <= max_b_; ++b) {
        const unsigned long n21 = at21 + (1UL << a);
        const unsigned long n12 = at12 + (1UL << b);
        const unsigned long n22 = at22 + (1UL << (a + b));
        if (n21 > targets_.antichains || n12 > targets_.cutsets || n22 > targets_.power) {
          continue;
        }
        chosen_.emplace_back(a, b);
        if (search(count + 1, a, b, n21, n12, n22)) {
          return true;
        }
        chosen_.pop_back();
      }
    }
    return false;
  }

  EvaluationTargets targets_;
  unsigned max_a_;
  unsigned max_b_;
  std::vector<std::pair<unsigned, unsigned>> chosen_;
};

} // namespace

std::optional<BivariatePoly> find_polynomial_with_evaluations(const EvaluationTargets& targets) {
  return MonomialSumSearch(targets).run();
}

bool impossibility_search(const EvaluationTargets& targets) {
  return find_polynomial_with_evaluations(targets).has_value();
}

} // namespace vtutte
