#include <doctest.h>

#include <cmath>

#include <vtutte/enumeration.hpp>
#include <vtutte/errors.hpp>

using namespace vtutte;

TEST_SUITE("enumeration") {

TEST_CASE("series coefficients") {
  auto v = v_series(8);
  const long expected[] = {1, 1, 2, 5, 14, 40, 121, 373, 1184};
  REQUIRE(v.order() == 8);
  for (std::size_t k = 0; k <= 8; ++k) CHECK(v[k] == expected[k]);
  CHECK(v_series(0).coeffs() == std::vector<Integer>{1});
  auto q = q_series(3);
  CHECK(q[1] == 1);
  CHECK(q[2] == 1);
  CHECK(q[3] == 3);
  auto w = w_series(3);
  CHECK(w[1] == 2);
  CHECK(w[2] == 1);
  CHECK(w[3] == 3);
  CHECK_THROWS(q_series(0));
}

TEST_CASE("exact recurrence up to order 200") {
  auto v = v_series(200);
  auto q = q_series(200);
  auto w = w_series(200);
  for (std::size_t n = 2; n <= 200; ++n) {
    REQUIRE(q[n] == 2 * v[n - 1] - v[n - 2]);
    REQUIRE(w[n] == q[n]);
    REQUIRE(v[n] > v[n - 1]);
  }
  // V is the multiset construction over Q: check directly by expanding
  // prod (1-x^k)^(-q_k) to order 30.
  const std::size_t m = 30;
  std::vector<Integer> prod(m + 1, 0);
  prod[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<Integer> next(m + 1, 0);
    for (std::size_t j = 0; j * k <= m; ++j) {
      Integer binom;
      Integer top = q[k] + static_cast<unsigned long>(j) - 1;
      mpz_bin_ui(binom.get_mpz_t(), top.get_mpz_t(), j);
      for (std::size_t i = 0; i + j * k <= m; ++i) next[i + j * k] += binom * prod[i];
    }
    prod = std::move(next);
  }
  for (std::size_t n = 0; n <= m; ++n) REQUIRE(prod[n] == v[n]);
}

TEST_CASE("census agrees with the series") {
  auto counts = census(8);
  auto v = v_series(8);
  REQUIRE(counts.size() == 8);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(counts[n - 1] == v[n]);
  CHECK(census(1) == std::vector<Integer>{1});
  CHECK_THROWS_AS(census(9), OracleBoundError);
  auto c = build_census(7);
  auto q = q_series(7);
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(Integer(static_cast<unsigned long>(c.connected[n].size())) == q[n]);
}

TEST_CASE("singular point") {
  auto a = solve_rho(100);
  CHECK(std::abs(a.rho - 0.263436) < 1e-5);
  CHECK(std::abs(a.rho_inv - 3.79599) < 1e-4);
  CHECK(a.rho > 0.2);
  CHECK(a.rho < 0.35);
  CHECK(a.truncation_order == 100);
  SingularityModel model(100);
  CHECK(model.r(0.0) == 0.0);
  CHECK(std::abs(model.r(a.rho) - std::exp(-1.0)) < 1e-10);
  CHECK(std::abs(solve_rho(80).rho - solve_rho(120).rho) < 1e-8);
  CHECK_THROWS_AS(solve_rho(59), std::invalid_argument);
  CHECK_THROWS_AS(solve_rho(100, 1e-13), std::invalid_argument);
}

TEST_CASE("tree-function identity") {
  SingularityModel model(100);
  for (double x : {0.05, 0.1, 0.15, 0.2}) {
    CAPTURE(x);
    const double w = model.w(x);
    CHECK(std::abs(w * std::exp(-w) - model.r(x)) < 1e-9);
  }
}

TEST_CASE("derivative of R") {
  SingularityModel model(100);
  for (double x : {0.1, 0.2, 0.25}) {
    const double h = 1e-6;
    const double fd = (model.r(x + h) - model.r(x - h)) / (2 * h);
    CHECK(std::abs(fd - model.r_derivative(x)) < 1e-6);
  }
}

TEST_CASE("prefactor and estimates") {
  auto a = asymptotic_constant(100);
  CHECK(std::abs(a.constant - 0.726213) < 1e-4);
  CHECK(a.r_derivative > 0);
  auto v = v_series(100);
  double prev = 1e9;
  for (std::size_t n : {25, 50, 100}) {
    const auto e = asymptotic_estimate(n, a);
    REQUIRE(!e.overflow);
    const double ratio = e.value / v[n].get_d();
    const double err = std::abs(ratio - 1.0);
    CHECK(err <= prev + 1e-3);
    prev = err;
  }
  CHECK(prev < 0.05);
  auto one = asymptotic_estimate(1, a);
  CHECK(std::isfinite(one.value));
  CHECK(one.value > 0);
  auto huge = asymptotic_estimate(2000, a);
  CHECK(huge.overflow);
  CHECK(std::isinf(huge.value));
}

} // TEST_SUITE
