#include "vtutte/vposet.hpp"

#include <utility>

namespace vtutte {

std::string ForbiddenPattern::to_string() const {
  std::string out = kind == Kind::bowtie ? "BOWTIE" : "N";
  for (std::size_t e : {u, v, w, x}) {
    out += ' ';
    out += std::to_string(e + 1);
  }
  return out;
}

BuildTrace BuildTrace::union_of(std::vector<BuildTrace> parts) {
  BuildTrace t;
  t.kind = Kind::disjoint_union;
  t.parts = std::move(parts);
  return t;
}

BuildTrace BuildTrace::greatest_over(BuildTrace inner, std::size_t element) {
  BuildTrace t;
  t.kind = Kind::add_greatest;
  t.parts.push_back(std::move(inner));
  t.element = element;
  return t;
}

BuildTrace BuildTrace::least_over(BuildTrace inner, std::size_t element) {
  BuildTrace t;
  t.kind = Kind::add_least;
  t.parts.push_back(std::move(inner));
  t.element = element;
  return t;
}

std::size_t BuildTrace::size() const {
  std::size_t n = (kind == Kind::add_greatest || kind == Kind::add_least) ? 1 : 0;
  for (const auto& part : parts) {
    n += part.size();
  }
  return n;
}

ElementSet BuildTrace::elements() const {
  ElementSet s = (kind == Kind::add_greatest || kind == Kind::add_least) ? singleton(element) : 0;
  for (const auto& part : parts) {
    s |= part.elements();
  }
  return s;
}

std::string BuildTrace::to_string() const {
  switch (kind) {
  case Kind::empty:
    return "empty";
  case Kind::add_greatest:
    return "(g " + inner().to_string() + ")";
  case Kind::add_least:
    return "(l " + inner().to_string() + ")";
  case Kind::disjoint_union: {
    std::string out = "(union";
    for (const auto& part : parts) {
      out += ' ';
      out += part.to_string();
    }
    return out + ")";
  }
  }
  return {};
}

Poset replay(const BuildTrace& trace) {
  switch (trace.kind) {
  case BuildTrace::Kind::empty:
    return Poset();
  case BuildTrace::Kind::add_greatest:
    return replay(trace.inner()).with_greatest();
  case BuildTrace::Kind::add_least:
    return replay(trace.inner()).with_least();
  case BuildTrace::Kind::disjoint_union: {
    std::vector<Poset> parts;
    for (const auto& part : trace.parts) {
      parts.push_back(replay(part));
    }
    return Poset::disjoint_union(parts);
  }
  }
  return Poset();
}

std::optional<ForbiddenPattern> find_forbidden(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.incomparable(u, v)) {
        continue;
      }
      // x below both u and v; w below u, incomparable to x.
      const ElementSet common = p.below(u) & p.below(v);
      for (std::size_t x = 0; x < n; ++x) {
        if (!contains(common, x)) {
          continue;
        }
        for (std::size_t w = 0; w < n; ++w) {
          if (contains(p.below(u), w) && p.incomparable(w, x)) {
            const auto kind = p.less(w, v) ? ForbiddenPattern::Kind::bowtie
                                           : ForbiddenPattern::Kind::n_poset;
            return ForbiddenPattern{u, v, w, x, kind};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<ElementSet> comparability_components(const Poset& p, ElementSet active) {
  std::vector<ElementSet> comps;
  ElementSet unseen = active;
  while (unseen != 0) {
    const ElementSet seed = unseen & (~unseen + 1);
    ElementSet comp = seed;
    ElementSet frontier = seed;
    while (frontier != 0) {
      ElementSet next = 0;
      for_each_element(frontier, [&](std::size_t e) { next |= p.comparable_to(e); });
      next &= active & ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

std::optional<BuildTrace> decompose_set(const Poset& p, ElementSet active);

std::optional<BuildTrace> decompose_connected(const Poset& p, ElementSet comp) {
  std::optional<std::size_t> least;
  std::optional<std::size_t> greatest;
  for_each_element(comp, [&](std::size_t e) {
    const ElementSet others = comp & ~singleton(e);
    if ((others & ~p.below(e)) == 0) {
      greatest = e;
    }
    if ((others & ~p.above(e)) == 0) {
      least = e;
    }
  });
  if (greatest) {
    auto inner = decompose_set(p, comp & ~singleton(*greatest));
    if (!inner) {
      return std::nullopt;
    }
    return BuildTrace::greatest_over(std::move(*inner), *greatest);
  }
  if (least) {
    auto inner = decompose_set(p, comp & ~singleton(*least));
    if (!inner) {
      return std::nullopt;
    }
    return BuildTrace::least_over(std::move(*inner), *least);
  }
  return std::nullopt;
}

std::optional<BuildTrace> decompose_set(const Poset& p, ElementSet active) {
  if (active == 0) {
    return BuildTrace::empty_trace();
  }
  const auto comps = comparability_components(p, active);
  if (comps.size() == 1) {
    return decompose_connected(p, active);
  }
  std::vector<BuildTrace> parts;
  for (ElementSet comp : comps) {
    auto part = decompose_connected(p, comp);
    if (!part) {
      return std::nullopt;
    }
    parts.push_back(std::move(*part));
  }
  return BuildTrace::union_of(std::move(parts));
}

} // namespace

std::optional<BuildTrace> decompose(const Poset& p) { return decompose_set(p, p.all()); }

VPosetCertificate is_v_poset(const Poset& p) {
  auto trace = decompose(p);
  auto pattern = find_forbidden(p);
  if (trace.has_value() == pattern.has_value()) {
    throw ConsistencyError("is_v_poset: decomposition and forbidden-pattern scan disagree");
  }
  if (trace) {
    return std::move(*trace);
  }
  return *pattern;
}

// ---------------------------------------------------------------------------

const char* to_string(ElementStatus status) {
  switch (status) {
  case ElementStatus::basic:
    return "basic";
  case ElementStatus::upper:
    return "upper";
  case ElementStatus::lower:
    return "lower";
  case ElementStatus::other:
    return "other";
  }
  return "?";
}

namespace {

bool is_chain(const Poset& p, ElementSet s) {
  bool chain = true;
  for_each_element(s, [&](std::size_t e) {
    if ((s & ~singleton(e) & ~p.comparable_to(e)) != 0) {
      chain = false;
    }
  });
  return chain;
}

bool is_basic(const Poset& p, std::size_t x) {
  if (!is_chain(p, p.below(x)) || !is_chain(p, p.above(x))) {
    return false;
  }
  // No u < x with the same strict up- and down-sets as x, ignoring u
  // and x themselves.
  bool has_twin_below = false;
  for_each_element(p.below(x), [&](std::size_t u) {
    const ElementSet ignore = ~(singleton(u) | singleton(x));
    if (((p.below(u) ^ p.below(x)) & ignore) == 0 && ((p.above(u) ^ p.above(x)) & ignore) == 0) {
      has_twin_below = true;
    }
  });
  return !has_twin_below;
}

ElementSet region_set_with_status(const Poset& p, const std::vector<ElementStatus>& status,
                                  ElementSet basic, std::size_t a) {
  const ElementSet incomparable_to_a = p.all() & ~p.comparable_to(a) & ~singleton(a);
  ElementSet region = 0;
  switch (status[a]) {
  case ElementStatus::basic:
  case ElementStatus::other:
    return 0;
  case ElementStatus::lower:
    for_each_element(p.above(a), [&](std::size_t b) {
      if ((p.below(b) & incomparable_to_a) == 0) {
        region |= singleton(b);
      }
    });
    return region;
  case ElementStatus::upper: {
    for_each_element(p.below(a), [&](std::size_t b) {
      if ((p.above(b) & incomparable_to_a) == 0) {
        region |= singleton(b);
      }
    });
    const ElementSet assoc = p.comparable_to(a) & basic;
    for_each_element(region, [&](std::size_t l) {
      if (status[l] == ElementStatus::lower && (p.comparable_to(l) & basic) == assoc) {
        region &= ~singleton(l);
      }
    });
    return region;
  }
  }
  return 0;
}

} // namespace

std::vector<ElementStatus> element_status(const Poset& p) {
  std::vector<ElementStatus> status(p.size(), ElementStatus::other);
  ElementSet basic = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (is_basic(p, e)) {
      status[e] = ElementStatus::basic;
      basic |= singleton(e);
    }
  }
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (status[e] == ElementStatus::basic) {
      continue;
    }
    if ((p.below(e) & basic) != 0) {
      status[e] = ElementStatus::upper;
    } else if ((p.above(e) & basic) != 0) {
      status[e] = ElementStatus::lower;
    }
  }
  return status;
}

ElementSet basic_elements(const Poset& p) {
  ElementSet basic = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (is_basic(p, e)) {
      basic |= singleton(e);
    }
  }
  return basic;
}

ElementSet associated_basic_set(const Poset& p, std::size_t a) {
  if (a >= p.size()) {
    throw std::out_of_range("associated_basic_set: invalid element");
  }
  return p.comparable_to(a) & basic_elements(p);
}

ElementSet region_set(const Poset& p, std::size_t a) {
  if (a >= p.size()) {
    throw std::out_of_range("region_set: invalid element " + std::to_string(a + 1));
  }
  const auto status = element_status(p);
  ElementSet basic = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (status[e] == ElementStatus::basic) {
      basic |= singleton(e);
    }
  }
  return region_set_with_status(p, status, basic, a);
}

std::vector<std::size_t> region_sizes(const Poset& p) {
  const auto status = element_status(p);
  ElementSet basic = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (status[e] == ElementStatus::basic) {
      basic |= singleton(e);
    }
  }
  std::vector<std::size_t> sizes(p.size());
  for (std::size_t e = 0; e < p.size(); ++e) {
    sizes[e] = cardinality(region_set_with_status(p, status, basic, e));
  }
  return sizes;
}

} // namespace vtutte
