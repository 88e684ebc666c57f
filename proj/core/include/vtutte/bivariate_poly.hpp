#ifndef VTUTTE_BIVARIATE_POLY_HPP
#define VTUTTE_BIVARIATE_POLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace vtutte {

using Integer = mpz_class;

/// Exponent pair of a monomial x^x_exp * y^y_exp.
struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending y-exponent, ties by descending x-exponent.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.y_exp != b.y_exp) {
      return a.y_exp > b.y_exp;
    }
    return a.x_exp > b.x_exp;
  }
};

struct Term {
  Integer coeff;
  Monomial mono;
};

/// Sparse polynomial in x and y with arbitrary-precision integer
/// coefficients. No stored coefficient is ever zero, so structural
/// equality of the term maps is polynomial equality.
class BivariatePoly {
public:
  using TermMap = std::map<Monomial, Integer, CanonicalOrder>;

  BivariatePoly() = default;

  static BivariatePoly monomial(const Integer& coeff, unsigned x_exp, unsigned y_exp);
  static BivariatePoly constant(const Integer& value) { return monomial(value, 0, 0); }
  static BivariatePoly one() { return constant(1); }
  static BivariatePoly x() { return monomial(1, 1, 0); }
  static BivariatePoly y() { return monomial(1, 0, 1); }

  /// Reads the canonical text form produced by `to_string()`. Also accepts
  /// any ordering of terms, repeated monomials and extra whitespace.
  static BivariatePoly parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Integer coefficient(unsigned x_exp, unsigned y_exp) const;

  /// Terms in canonical order.
  std::vector<Term> term_list() const;

  unsigned x_degree() const;
  unsigned y_degree() const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const BivariatePoly& other);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a) { return a.scaled(-1); }

  BivariatePoly scaled(const Integer& factor) const;
  BivariatePoly pow(unsigned exponent) const;

  Integer eval(const Integer& x0, const Integer& y0) const;

  /// Substitutes y = y0, leaving a polynomial in x alone.
  BivariatePoly at_y(const Integer& y0) const;
  /// Substitutes x = x0, leaving a polynomial in y alone.
  BivariatePoly at_x(const Integer& x0) const;

  /// Canonical text, e.g. "y^9 + x*y^6 + 3*x^2*y^2 + x^4"; zero prints "0".
  std::string to_string() const;

  /// Machine-readable form: `[[coeff, xExp, yExp], ...]` in canonical order,
  /// integers written in full.
  std::string to_json() const;

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

private:
  void add_term(const Monomial& mono, const Integer& coeff);

  TermMap terms_;
};

std::string to_string(const BivariatePoly& p);

} // namespace vtutte

#endif // VTUTTE_BIVARIATE_POLY_HPP
