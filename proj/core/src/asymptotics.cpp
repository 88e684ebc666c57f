#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vtutte/enumeration.hpp"
#include "vtutte/errors.hpp"

namespace vtutte {

namespace {

constexpr double power_cutoff = 1e-18;

} // namespace

SingularityModel::SingularityModel(std::size_t order) {
  const IntSeries w = w_series(order);
  w_.reserve(order + 1);
  for (const auto& c : w.coeffs()) {
    w_.push_back(c.get_d());
  }
}

double SingularityModel::w(double x) const {
  double acc = 0.0;
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double SingularityModel::w_derivative(double x) const {
  double acc = 0.0;
  for (std::size_t k = w_.size() - 1; k >= 1; --k) {
    acc = acc * x + static_cast<double>(k) * w_[k];
  }
  return acc;
}

double SingularityModel::tail_sum(double x) const {
  double sum = 0.0;
  double xm = x * x;
  for (int m = 2; xm >= power_cutoff; ++m, xm *= x) {
    sum += w(xm) / m;
  }
  return sum;
}

double SingularityModel::r(double x) const {
  return x * (1.0 - x) * (2.0 - x) * std::exp(tail_sum(x));
}

double SingularityModel::r_derivative(double x) const {
  double log_derivative = 1.0 / x - 1.0 / (1.0 - x) - 1.0 / (2.0 - x);
  double xm1 = x;  // x^(m-1)
  for (int m = 2; xm1 * x >= power_cutoff; ++m, xm1 *= x) {
    log_derivative += xm1 * w_derivative(xm1 * x);
  }
  return r(x) * log_derivative;
}

AsymptoticResult solve_rho(std::size_t order, double tol) {
  if (order < min_asymptotic_order) {
    throw std::invalid_argument("solve_rho: truncation order must be at least 60");
  }
  if (!(tol >= 1e-12)) {
    throw std::invalid_argument("solve_rho: tolerance must be at least 1e-12");
  }
  const SingularityModel model(order);
  const double target = std::exp(-1.0);
  double lo = bracket_low;
  double hi = bracket_high;
  const double f_lo = model.r(lo) - target;
  const double f_hi = model.r(hi) - target;
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || !(f_lo < 0.0 && f_hi > 0.0)) {
    throw SolverError("solve_rho: R(x) - 1/e has no sign change on [0.2, 0.35]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (model.r(mid) - target < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  AsymptoticResult result;
  result.rho = 0.5 * (lo + hi);
  result.rho_inv = 1.0 / result.rho;
  result.truncation_order = order;
  result.bracket_width = hi - lo;
  return result;
}

AsymptoticResult asymptotic_constant(std::size_t order, double tol) {
  AsymptoticResult result = solve_rho(order, tol);
  const SingularityModel model(order);
  const double rho = result.rho;
  result.r_derivative = model.r_derivative(rho);
  if (!(result.r_derivative > 0.0)) {
    throw SolverError("asymptotic_constant: R'(rho) is not positive");
  }
  result.constant = std::sqrt(std::numbers::e * result.r_derivative) /
                    (std::sqrt(2.0 * std::numbers::pi * rho) * (2.0 - rho));
  return result;
}

AsymptoticEstimate asymptotic_estimate(std::size_t n, const AsymptoticResult& a) {
  if (n == 0) {
    throw std::invalid_argument("asymptotic_estimate: n must be positive");
  }
  const double nd = static_cast<double>(n);
  const double log_value = std::log(a.constant) - 1.5 * std::log(nd) - nd * std::log(a.rho);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {std::exp(log_value), false};
}

} // namespace vtutte
