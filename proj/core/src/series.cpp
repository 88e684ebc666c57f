#include <stdexcept>
#include <string>

#include "vtutte/enumeration.hpp"
#include "vtutte/errors.hpp"

namespace vtutte {

double IntSeries::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + it->get_d();
  }
  return acc;
}

double IntSeries::eval_derivative(double t) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    acc = acc * t + static_cast<double>(k) * coeffs_[k].get_d();
  }
  return acc;
}

IntSeries v_series(std::size_t order) {
  IntSeries v(order);
  v[0] = 1;
  std::vector<Integer> q(order + 1, 0);
  std::vector<Integer> c(order + 1, 0);
  for (std::size_t n = 1; n <= order; ++n) {
    q[n] = n == 1 ? Integer(1) : Integer(2 * v[n - 1] - v[n - 2]);
    // c_n = sum over divisors d of n of d * q_d; all q_d with d <= n are known.
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      c[n] += Integer(static_cast<unsigned long>(d)) * q[d];
      const std::size_t e = n / d;
      if (e != d) {
        c[n] += Integer(static_cast<unsigned long>(e)) * q[e];
      }
    }
    Integer sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      sum += c[k] * v[n - k];
    }
    if (mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)) == 0) {
      throw ConsistencyError("v_series: n * v_n not divisible by n at n = " + std::to_string(n));
    }
    mpz_divexact_ui(v[n].get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return v;
}

IntSeries q_series(std::size_t order) {
  if (order == 0) {
    throw std::invalid_argument("q_series: order must be at least 1");
  }
  const IntSeries v = v_series(order);
  IntSeries q(order);
  q[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    q[n] = 2 * v[n - 1] - v[n - 2];
  }
  return q;
}

IntSeries w_series(std::size_t order) {
  IntSeries w = q_series(order);
  w[1] += 1;
  return w;
}

} // namespace vtutte
