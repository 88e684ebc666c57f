#ifndef VTUTTE_ENUMERATION_HPP
#define VTUTTE_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "vtutte/bivariate_poly.hpp"
#include "vtutte/poset.hpp"

namespace vtutte {

/// Power series truncated after x^order; every stored coefficient is exact.
class IntSeries {
public:
  explicit IntSeries(std::size_t order) : coeffs_(order + 1, 0) {}

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
  Integer& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Partial sum at t in double precision.
  double eval(double t) const;
  /// Termwise derivative evaluated at t.
  double eval_derivative(double t) const;

private:
  std::vector<Integer> coeffs_;
};

/// v_0..v_order, the number of V-posets of each size (v_0 = 1), by the
/// integer multiset recurrence
///   q_1 = 1, q_n = 2 v_{n-1} - v_{n-2},   c_k = sum_{d | k} d q_d,
///   n v_n = sum_{k=1}^{n} c_k v_{n-k}.
/// Throws ConsistencyError if a division by n is inexact.
IntSeries v_series(std::size_t order);

/// Connected V-posets (with a least or greatest element): q_0 = 0.
IntSeries q_series(std::size_t order);

/// Coefficients of x (2 - x) V(x): w_1 = 2 and w_n = q_n for n >= 2.
IntSeries w_series(std::size_t order);

// ---------------------------------------------------------------------------
// Constructive census

inline constexpr std::size_t max_census_size = 8;

struct Census {
  /// all[n]: one representative per isomorphism class of n-element V-posets.
  std::vector<std::vector<Poset>> all;
  /// connected[n]: those with a least or greatest element.
  std::vector<std::vector<Poset>> connected;
};

/// Connected classes of size n come from adding a greatest or least element
/// to every class of size n - 1, deduplicated by isomorphism; general classes
/// are multisets of connected ones.
Census build_census(std::size_t max_size);

/// Counts of V-posets of sizes 1..max_size from `build_census`.
std::vector<Integer> census(std::size_t max_size);

// ---------------------------------------------------------------------------
// Asymptotics

struct AsymptoticResult {
  double rho = 0.0;
  double rho_inv = 0.0;
  double constant = 0.0;
  double r_derivative = 0.0;
  std::size_t truncation_order = 0;
  double bracket_width = 0.0;
};

/// W truncated at `order` and evaluated in double precision.
class SingularityModel {
public:
  explicit SingularityModel(std::size_t order);

  std::size_t order() const noexcept { return w_.size() - 1; }

  double w(double x) const;
  double w_derivative(double x) const;
  /// sum_{m >= 2} W(x^m) / m, stopped once x^m drops below 1e-18.
  double tail_sum(double x) const;
  /// x (1 - x) (2 - x) exp(tail_sum(x)).
  double r(double x) const;
  /// R'(x) through the logarithmic derivative.
  double r_derivative(double x) const;

private:
  std::vector<double> w_;
};

inline constexpr double bracket_low = 0.2;
inline constexpr double bracket_high = 0.35;
inline constexpr std::size_t min_asymptotic_order = 60;

/// Bisection for R(x) = 1/e on [0.2, 0.35]. Fills rho, rho_inv,
/// truncation_order and bracket_width. Throws SolverError without a sign
/// change, std::invalid_argument for order < 60 or tol < 1e-12.
AsymptoticResult solve_rho(std::size_t order, double tol = 1e-12);

/// solve_rho plus R'(rho) and the prefactor sqrt(e R'(rho)) / (sqrt(2 pi rho) (2 - rho)).
AsymptoticResult asymptotic_constant(std::size_t order, double tol = 1e-12);

struct AsymptoticEstimate {
  double value = 0.0;
  bool overflow = false;
};

/// constant * n^{-3/2} * rho^{-n}; +infinity with `overflow` set when the
/// result exceeds double range.
AsymptoticEstimate asymptotic_estimate(std::size_t n, const AsymptoticResult& a);

} // namespace vtutte

#endif // VTUTTE_ENUMERATION_HPP
