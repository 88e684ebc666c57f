#include "vtutte/poset.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "vtutte/rooted_tree.hpp"

namespace vtutte {

std::vector<std::size_t> elements_of(ElementSet s) {
  std::vector<std::size_t> out;
  for_each_element(s, [&](std::size_t e) { out.push_back(e); });
  return out;
}

Poset::Poset(std::size_t n) : above_(n, 0), below_(n, 0) {
  if (n > max_size) {
    throw std::invalid_argument("poset: at most 64 elements supported");
  }
}

void Poset::fill_below() {
  below_.assign(above_.size(), 0);
  for (std::size_t u = 0; u < above_.size(); ++u) {
    for_each_element(above_[u], [&](std::size_t v) { below_[v] |= singleton(u); });
  }
}

Poset Poset::from_covers(std::size_t n,
                         std::span<const std::pair<std::size_t, std::size_t>> covers) {
  Poset p(n);
  for (const auto& [u, v] : covers) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("poset: relation index out of range");
    }
    if (u == v) {
      throw std::invalid_argument("poset: self-relation " + std::to_string(u + 1) + " < " +
                                  std::to_string(v + 1));
    }
    p.above_[u] |= singleton(v);
  }
  // Transitive closure by relaxation until nothing changes.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      ElementSet reach = p.above_[u];
      for_each_element(p.above_[u], [&](std::size_t v) { reach |= p.above_[v]; });
      if (reach != p.above_[u]) {
        p.above_[u] = reach;
        changed = true;
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (contains(p.above_[u], u)) {
      throw std::invalid_argument("poset: cover relations contain a cycle through element " +
                                  std::to_string(u + 1));
    }
  }
  p.fill_below();
  return p;
}

Poset Poset::from_relation(std::vector<ElementSet> above) {
  const std::size_t n = above.size();
  Poset p(n);
  const ElementSet universe = p.all();
  for (std::size_t u = 0; u < n; ++u) {
    if ((above[u] & ~universe) != 0) {
      throw std::invalid_argument("poset: relation index out of range");
    }
    if (contains(above[u], u)) {
      throw std::invalid_argument("poset: relation is not irreflexive");
    }
    for_each_element(above[u], [&](std::size_t v) {
      if ((above[v] & ~above[u]) != 0) {
        throw std::invalid_argument("poset: relation is not transitive");
      }
    });
  }
  p.above_ = std::move(above);
  p.fill_below();
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    ElementSet between = 0;
    for_each_element(above_[u], [&](std::size_t v) { between |= above_[v]; });
    for_each_element(above_[u] & ~between, [&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

Poset Poset::dual() const {
  Poset d;
  d.above_ = below_;
  d.below_ = above_;
  return d;
}

namespace {

// Compresses the bits of `s` selected by `subset` into consecutive positions.
ElementSet compress(ElementSet s, ElementSet subset) {
  ElementSet out = 0;
  std::size_t pos = 0;
  for_each_element(subset, [&](std::size_t e) {
    if (contains(s, e)) {
      out |= singleton(pos);
    }
    ++pos;
  });
  return out;
}

} // namespace

Poset Poset::induced(ElementSet subset) const {
  subset &= all();
  std::vector<ElementSet> above;
  for_each_element(subset, [&](std::size_t e) { above.push_back(compress(above_[e], subset)); });
  Poset p;
  p.above_ = std::move(above);
  p.fill_below();
  return p;
}

Poset Poset::with_greatest() const {
  if (size() == max_size) {
    throw std::invalid_argument("poset: at most 64 elements supported");
  }
  Poset p = *this;
  const std::size_t g = size();
  for (auto& row : p.above_) {
    row |= singleton(g);
  }
  p.above_.push_back(0);
  p.fill_below();
  return p;
}

Poset Poset::with_least() const {
  if (size() == max_size) {
    throw std::invalid_argument("poset: at most 64 elements supported");
  }
  Poset p = *this;
  p.above_.push_back(all());
  p.fill_below();
  return p;
}

Poset Poset::disjoint_union(std::span<const Poset> parts) {
  std::size_t total = 0;
  for (const auto& part : parts) {
    total += part.size();
  }
  Poset p(total);
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (std::size_t u = 0; u < part.size(); ++u) {
      p.above_[offset + u] = part.above_[u] << offset;
    }
    offset += part.size();
  }
  p.fill_below();
  return p;
}

std::string Poset::to_text() const {
  std::ostringstream out;
  out << size() << '\n';
  for (const auto& [u, v] : covers()) {
    out << (u + 1) << ' ' << (v + 1) << '\n';
  }
  return out.str();
}

namespace {

bool parse_index(std::string_view token, std::size_t& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      words.push_back(line.substr(start, i - start));
    }
  }
  return words;
}

} // namespace

Poset parse_poset(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      continue;
    }
    const std::string where = "poset parse error on line " + std::to_string(line_no) + ": ";
    if (!n) {
      std::size_t count = 0;
      if (words.size() != 1 || !parse_index(words[0], count)) {
        throw ParseError(where + "expected the element count", line_no);
      }
      if (count > Poset::max_size) {
        throw ParseError(where + "at most 64 elements supported", line_no);
      }
      n = count;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (words.size() != 2 || !parse_index(words[0], u) || !parse_index(words[1], v)) {
      throw ParseError(where + "expected a relation \"u v\"", line_no);
    }
    if (u == 0 || v == 0 || u > *n || v > *n) {
      throw ParseError(where + "element index out of range 1.." + std::to_string(*n), line_no);
    }
    if (u == v) {
      throw ParseError(where + "self-relation " + std::to_string(u) + " < " + std::to_string(v),
                       line_no);
    }
    covers.emplace_back(u - 1, v - 1);
  }
  if (!n) {
    throw ParseError("poset parse error: missing element count", line_no);
  }
  try {
    return Poset::from_covers(*n, covers);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("poset parse error: ") + e.what(), line_no);
  }
}

std::vector<std::pair<std::size_t, std::size_t>> poset_signature(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> sig;
  sig.reserve(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) {
    sig.emplace_back(cardinality(p.below(u)), cardinality(p.above(u)));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

namespace {

class IsomorphismSearch {
public:
  IsomorphismSearch(const Poset& p, const Poset& q) : p_(p), q_(q), image_(p.size()) {}

  bool run() { return extend(0, 0); }

private:
  bool extend(std::size_t u, ElementSet used) {
    if (u == p_.size()) {
      return true;
    }
    const auto below = cardinality(p_.below(u));
    const auto above = cardinality(p_.above(u));
    for (std::size_t cand = 0; cand < q_.size(); ++cand) {
      if (contains(used, cand) || cardinality(q_.below(cand)) != below ||
          cardinality(q_.above(cand)) != above) {
        continue;
      }
      bool consistent = true;
      for (std::size_t prev = 0; prev < u && consistent; ++prev) {
        consistent = p_.less(prev, u) == q_.less(image_[prev], cand) &&
                     p_.less(u, prev) == q_.less(cand, image_[prev]);
      }
      if (!consistent) {
        continue;
      }
      image_[u] = cand;
      if (extend(u + 1, used | singleton(cand))) {
        return true;
      }
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<std::size_t> image_;
};

} // namespace

bool poset_isomorphic(const Poset& p, const Poset& q, std::size_t bound) {
  const std::size_t larger = std::max(p.size(), q.size());
  if (larger > bound) {
    throw OracleBoundError("poset_isomorphic", larger, bound);
  }
  if (p.size() != q.size() || poset_signature(p) != poset_signature(q)) {
    return false;
  }
  return IsomorphismSearch(p, q).run();
}

std::vector<Poset> enumerate_labeled_posets(std::size_t n) {
  if (n > max_labeled_enumeration_size) {
    throw OracleBoundError("enumerate_labeled_posets", n, max_labeled_enumeration_size);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  std::vector<Poset> out;
  // Each unordered pair is unrelated, i < j or j < i: a base-3 counter.
  std::vector<unsigned char> state(pairs.size(), 0);
  std::vector<ElementSet> above(n);
  for (;;) {
    std::fill(above.begin(), above.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      if (state[k] == 1) {
        above[i] |= singleton(j);
      } else if (state[k] == 2) {
        above[j] |= singleton(i);
      }
    }
    bool transitive = true;
    for (std::size_t u = 0; u < n && transitive; ++u) {
      for_each_element(above[u], [&](std::size_t v) {
        if ((above[v] & ~above[u]) != 0) {
          transitive = false;
        }
      });
    }
    if (transitive) {
      out.push_back(Poset::from_relation(above));
    }
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) {
      state[k++] = 0;
    }
    if (k == state.size()) {
      break;
    }
    ++state[k];
  }
  return out;
}

Poset tree_to_poset(const RootedTree& t, TreeOrientation orientation) {
  const TreeIndex idx = index_tree(t);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t v = 1; v < idx.size(); ++v) {
    const auto parent = static_cast<std::size_t>(idx.parent[v]);
    if (orientation == TreeOrientation::root_greatest) {
      covers.emplace_back(v, parent);
    } else {
      covers.emplace_back(parent, v);
    }
  }
  return Poset::from_covers(idx.size(), covers);
}

} // namespace vtutte
