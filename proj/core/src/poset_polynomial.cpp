#include "vtutte/vposet.hpp"

namespace vtutte {

namespace {

void require_bound(const char* op, const Poset& p, std::size_t bound) {
  if (p.size() > bound) {
    throw OracleBoundError(op, p.size(), bound);
  }
}

// Bron-Kerbosch with pivoting on the incomparability graph.
class AntichainCollector {
public:
  explicit AntichainCollector(const Poset& p) : neighbours_(p.size()) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      neighbours_[e] = p.all() & ~p.comparable_to(e) & ~singleton(e);
    }
  }

  std::vector<ElementSet> run(ElementSet candidates) {
    expand(0, candidates, 0);
    return std::move(found_);
  }

private:
  void expand(ElementSet chosen, ElementSet candidates, ElementSet excluded) {
    if (candidates == 0 && excluded == 0) {
      found_.push_back(chosen);
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for_each_element(candidates | excluded, [&](std::size_t u) {
      const std::size_t score = cardinality(candidates & neighbours_[u]);
      if (first || score > best) {
        pivot = u;
        best = score;
        first = false;
      }
    });
    for_each_element(candidates & ~neighbours_[pivot], [&](std::size_t v) {
      expand(chosen | singleton(v), candidates & neighbours_[v], excluded & neighbours_[v]);
      candidates &= ~singleton(v);
      excluded |= singleton(v);
    });
  }

  std::vector<ElementSet> neighbours_;
  std::vector<ElementSet> found_;
};

void require_v_poset(const Poset& p) {
  if (auto pattern = find_forbidden(p)) {
    throw NotVPosetError(*pattern);
  }
}

} // namespace

std::vector<ElementSet> maximal_antichains_poset(const Poset& p, std::size_t bound) {
  require_bound("maximal_antichains_poset", p, bound);
  return AntichainCollector(p).run(p.all());
}

std::vector<PosetAntichain> weighted_maximal_antichains(const Poset& p, std::size_t bound) {
  const auto antichains = maximal_antichains_poset(p, bound);
  const ElementSet basic = basic_elements(p);
  const auto regions = region_sizes(p);
  std::vector<PosetAntichain> out;
  out.reserve(antichains.size());
  for (ElementSet a : antichains) {
    PosetAntichain w;
    w.elements = a;
    w.basic = cardinality(a & basic);
    for_each_element(a, [&](std::size_t e) { w.region += regions[e]; });
    out.push_back(w);
  }
  return out;
}

BivariatePoly poset_L_poly(const Poset& p, std::size_t bound) {
  require_bound("poset_L_poly", p, bound);
  require_v_poset(p);
  BivariatePoly sum;
  for (const auto& a : weighted_maximal_antichains(p, bound)) {
    sum += BivariatePoly::monomial(1, static_cast<unsigned>(a.basic),
                                   static_cast<unsigned>(a.region));
  }
  return sum;
}

BivariatePoly poset_poly(const BuildTrace& trace) {
  switch (trace.kind) {
  case BuildTrace::Kind::empty:
    return BivariatePoly::one();
  case BuildTrace::Kind::disjoint_union: {
    BivariatePoly product = BivariatePoly::one();
    for (const auto& part : trace.parts) {
      product *= poset_poly(part);
    }
    return product;
  }
  case BuildTrace::Kind::add_greatest:
  case BuildTrace::Kind::add_least: {
    const std::size_t inner_size = trace.inner().size();
    if (inner_size == 0) {
      return BivariatePoly::x();
    }
    return poset_poly(trace.inner()) +
           BivariatePoly::monomial(1, 0, static_cast<unsigned>(inner_size));
  }
  }
  throw ConsistencyError("poset_poly: unknown trace kind");
}

BivariatePoly poset_poly(const Poset& p) {
  auto trace = decompose(p);
  if (!trace) {
    auto pattern = find_forbidden(p);
    if (!pattern) {
      throw ConsistencyError("poset_poly: decomposition failed without a forbidden pattern");
    }
    throw NotVPosetError(*pattern);
  }
  return poset_poly(*trace);
}

} // namespace vtutte
