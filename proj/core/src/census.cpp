#include <map>
#include <stdexcept>

#include "vtutte/enumeration.hpp"
#include "vtutte/errors.hpp"

namespace vtutte {

namespace {

using Signature = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<Poset> dedupe_by_isomorphism(std::vector<Poset> candidates) {
  std::map<Signature, std::vector<std::size_t>> buckets;
  std::vector<Poset> unique;
  for (auto& cand : candidates) {
    auto& bucket = buckets[poset_signature(cand)];
    bool seen = false;
    for (std::size_t idx : bucket) {
      if (poset_isomorphic(unique[idx], cand)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(unique.size());
      unique.push_back(std::move(cand));
    }
  }
  return unique;
}

// Multisets of connected classes with total size `remaining`, drawn in
// nondecreasing (size, index) order.
void assemble(const std::vector<std::vector<Poset>>& connected, std::size_t remaining,
              std::size_t min_size, std::size_t min_index, std::vector<Poset>& parts,
              std::vector<Poset>& out) {
  if (remaining == 0) {
    out.push_back(Poset::disjoint_union(parts));
    return;
  }
  for (std::size_t s = min_size; s <= remaining; ++s) {
    const auto& pool = connected[s];
    for (std::size_t i = (s == min_size ? min_index : 0); i < pool.size(); ++i) {
      parts.push_back(pool[i]);
      assemble(connected, remaining - s, s, i, parts, out);
      parts.pop_back();
    }
  }
}

} // namespace

Census build_census(std::size_t max_size) {
  if (max_size > max_census_size) {
    throw OracleBoundError("census", max_size, max_census_size);
  }
  Census c;
  c.all.resize(max_size + 1);
  c.connected.resize(max_size + 1);
  c.all[0].emplace_back();
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<Poset> candidates;
    for (const auto& p : c.all[n - 1]) {
      candidates.push_back(p.with_greatest());
      candidates.push_back(p.with_least());
    }
    c.connected[n] = dedupe_by_isomorphism(std::move(candidates));

    std::vector<Poset> parts;
    assemble(c.connected, n, 1, 0, parts, c.all[n]);
  }
  return c;
}

std::vector<Integer> census(std::size_t max_size) {
  if (max_size == 0) {
    throw std::invalid_argument("census: max_size must be positive");
  }
  const Census c = build_census(max_size);
  std::vector<Integer> counts;
  for (std::size_t n = 1; n <= max_size; ++n) {
    counts.emplace_back(static_cast<unsigned long>(c.all[n].size()));
  }
  return counts;
}

} // namespace vtutte
