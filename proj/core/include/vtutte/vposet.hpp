#ifndef VTUTTE_VPOSET_HPP
#define VTUTTE_VPOSET_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vtutte/bivariate_poly.hpp"
#include "vtutte/errors.hpp"
#include "vtutte/poset.hpp"

namespace vtutte {

// ---------------------------------------------------------------------------
// Recognition

/// Four elements with u > w, u > x, v > x, u || v and w || x. Such a
/// quadruple induces an N (v, w incomparable) or a bowtie (v > w).
struct ForbiddenPattern {
  enum class Kind { n_poset, bowtie };

  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t w = 0;
  std::size_t x = 0;
  Kind kind = Kind::n_poset;

  /// "N u v w x" or "BOWTIE u v w x" with 1-indexed elements.
  std::string to_string() const;

  friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;
};

/// Recipe building a poset from the empty one: disjoint unions of connected
/// parts and additions of a greatest or least element.
struct BuildTrace {
  enum class Kind { empty, disjoint_union, add_greatest, add_least };

  Kind kind = Kind::empty;
  /// Union parts, or the single inner trace of an addition.
  std::vector<BuildTrace> parts;
  /// Element of the certified poset introduced by an addition.
  std::size_t element = 0;

  static BuildTrace empty_trace() { return {}; }
  static BuildTrace union_of(std::vector<BuildTrace> parts);
  static BuildTrace greatest_over(BuildTrace inner, std::size_t element = 0);
  static BuildTrace least_over(BuildTrace inner, std::size_t element = 0);

  const BuildTrace& inner() const { return parts.at(0); }

  /// Number of elements the trace builds.
  std::size_t size() const;
  /// Elements of the certified poset this trace accounts for.
  ElementSet elements() const;

  /// S-expression: "empty", "(g T)", "(l T)", "(union T1 T2 ...)".
  std::string to_string() const;
};

/// Builds the poset the trace describes. Elements are numbered in the order
/// they are introduced.
Poset replay(const BuildTrace& trace);

/// O(n^4) scan for a forbidden quadruple.
std::optional<ForbiddenPattern> find_forbidden(const Poset& p);

/// Splits into components of the comparability graph; each must have a
/// greatest or least element, which is removed (greatest preferred) before
/// recursing. Fails exactly when the poset is not a V-poset.
std::optional<BuildTrace> decompose(const Poset& p);

using VPosetCertificate = std::variant<BuildTrace, ForbiddenPattern>;

/// Either a build trace or a forbidden pattern. Throws ConsistencyError if
/// the two recognisers disagree.
VPosetCertificate is_v_poset(const Poset& p);

/// Raised when an operation defined only on V-posets receives another poset.
class NotVPosetError : public std::invalid_argument {
public:
  explicit NotVPosetError(const ForbiddenPattern& witness)
      : std::invalid_argument("not a V-poset: contains " + witness.to_string()),
        witness_(witness) {}

  const ForbiddenPattern& witness() const noexcept { return witness_; }

private:
  ForbiddenPattern witness_;
};

// ---------------------------------------------------------------------------
// Basic elements

enum class ElementStatus { basic, upper, lower, other };

const char* to_string(ElementStatus status);

/// An element is basic when its strict down-set and up-set are chains and no
/// smaller element has the same up- and down-sets apart from the pair
/// itself. Others are upper (above some basic element) or lower (below one). A non-basic
/// element that is both is reported as upper; neither happens in V-posets.
std::vector<ElementStatus> element_status(const Poset& p);

ElementSet basic_elements(const Poset& p);

/// Basic elements comparable to `a`.
ElementSet associated_basic_set(const Poset& p, std::size_t a);

/// The region P_a weighted by y in the antichain expansion: empty for basic
/// elements; for a lower element, the b > a with nothing below b
/// incomparable to a; for an upper element, the b < a with nothing above b
/// incomparable to a, minus the lower elements associated with the same
/// basic set. Defined literally on any poset, meaningful on V-posets.
ElementSet region_set(const Poset& p, std::size_t a);

/// |P_a| for every element a.
std::vector<std::size_t> region_sizes(const Poset& p);

// ---------------------------------------------------------------------------
// Polynomials

struct PosetAntichain {
  ElementSet elements = 0;
  std::size_t basic = 0;   // b(A)
  std::size_t region = 0;  // s(A) = sum of |P_a|
};

/// Maximal antichains (maximal cliques of the incomparability graph), each
/// once. Refuses posets above `bound` elements.
std::vector<ElementSet> maximal_antichains_poset(const Poset& p,
                                                 std::size_t bound = default_oracle_bound);

/// Maximal antichains with their b(A) and s(A) weights.
std::vector<PosetAntichain> weighted_maximal_antichains(const Poset& p,
                                                        std::size_t bound = default_oracle_bound);

/// Sum over maximal antichains of x^b(A) y^s(A). Throws NotVPosetError.
BivariatePoly poset_L_poly(const Poset& p, std::size_t bound = default_oracle_bound);

/// Recursion along the decomposition: 1 for the empty poset, x for a single
/// element, products over unions, and P + y^|P| for an added greatest or
/// least element. Throws NotVPosetError.
BivariatePoly poset_poly(const Poset& p);

BivariatePoly poset_poly(const BuildTrace& trace);

// ---------------------------------------------------------------------------
// Brute-force oracles; all refuse posets above `bound` elements.

Integer count_antichains_poset(const Poset& p, std::size_t bound = default_oracle_bound);
Integer count_cutsets_poset(const Poset& p, std::size_t bound = default_oracle_bound);
Integer count_maximal_antichains_poset(const Poset& p, std::size_t bound = default_oracle_bound);
Integer count_maximal_antichains_no_basic(const Poset& p,
                                          std::size_t bound = default_oracle_bound);

/// Maximal chains, found as maximal paths in the Hasse diagram.
std::vector<ElementSet> maximal_chains(const Poset& p, std::size_t bound = default_oracle_bound);

/// Inclusion-minimal sets meeting every maximal chain.
std::vector<ElementSet> minimal_cutsets(const Poset& p, std::size_t bound = default_oracle_bound);

// ---------------------------------------------------------------------------
// Impossibility of a polynomial for non-V-posets

struct EvaluationTargets {
  unsigned maximal_antichains = 0;  // P(1,1)
  unsigned antichains = 0;          // P(2,1)
  unsigned cutsets = 0;             // P(1,2)
  unsigned power = 0;               // P(2,2)
};

/// Searches sums of `maximal_antichains` monomials x^a y^b, exponents
/// bounded by log2 of the targets, whose values at (2,1), (1,2) and (2,2)
/// hit the targets. Returns the first such polynomial.
std::optional<BivariatePoly> find_polynomial_with_evaluations(const EvaluationTargets& targets);

/// True iff some monomial sum satisfies all four evaluation constraints.
bool impossibility_search(const EvaluationTargets& targets);

} // namespace vtutte

#endif // VTUTTE_VPOSET_HPP
