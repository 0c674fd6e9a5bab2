#include <array>
#include <cmath>

#include "doctest.h"

#include "constants.hpp"
#include "golden.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/hurwitz.hpp"
#include "hzeta/special_fn.hpp"
#include "hzeta/stieltjes.hpp"
#include "hzeta/zeros.hpp"

using namespace hzeta;

namespace {

void check_coeffs(double a, const std::array<double, 9>& ref) {
  const auto e = stieltjes(a);
  REQUIRE(e.coeffs.size() == 9);
  for (int n = 0; n <= 8; ++n) {
    const double tol = n <= 4 ? 1e-9 : 1e-6;
    CHECK(std::abs(e.coeffs[n] - ref[n]) <= tol * std::max(1.0, std::abs(ref[n])));
  }
}

}  // namespace

TEST_CASE("leading coefficient is -digamma") {
  CHECK(std::abs(stieltjes(1.0).coeffs[0] - constants::kEulerGamma) <= 1e-12);
  CHECK(std::abs(stieltjes(0.5).coeffs[0] - (constants::kEulerGamma + 2.0 * constants::kLn2)) <= 1e-12);
  for (const double a : {0.1, 0.25, 0.5, 1.0}) {
    CHECK(std::abs(stieltjes(a).coeffs[0] + digamma(a)) <= 1e-9);
  }
}

TEST_CASE("coefficients against high-precision values") {
  check_coeffs(0.01, golden::kLaurent_0p01);
  check_coeffs(0.05, golden::kLaurent_0p05);
  check_coeffs(0.1, golden::kLaurent_0p1);
  check_coeffs(0.25, golden::kLaurent_0p25);
  check_coeffs(0.5, golden::kLaurent_0p5);
  check_coeffs(1.0, golden::kLaurent_1);
}

TEST_CASE("Laurent reconstruction near s = 1") {
  for (const double a : {0.01, 0.1, 0.25, 0.5, 1.0}) {
    const auto e = stieltjes(a);
    CHECK(e.a == a);
    CHECK(e.order == 8);
    // The a^{-s} term makes the order-8 tail ~ (|s-1| log(1/a))^9 / (9! a);
    // at a = 0.01 it stays below 1e-8 only for |s-1| <= 0.05.
    const double radius = a < 0.1 ? 0.05 : 0.1;
    for (double s = 1.0 - radius; s <= 1.0 + radius + 1e-12; s += radius / 4.0) {
      if (std::abs(s - 1.0) < 1e-9) continue;
      CHECK(std::abs(e.evaluate(s) - zeta_em(s, a).value) <= 1e-8);
    }
  }
}

TEST_CASE("order and domain") {
  CHECK(stieltjes(0.3, 0).coeffs.size() == 1);
  CHECK(stieltjes(0.3, 4).coeffs.size() == 5);
  CHECK_THROWS_AS(stieltjes(0.3, 9), DomainError);
  CHECK_THROWS_AS(stieltjes(0.3, -1), DomainError);
  CHECK_THROWS_AS(stieltjes(0.0), DomainError);
  CHECK_THROWS_AS(beta_via_stieltjes(0.2), DomainError);
  CHECK_THROWS_AS(beta_via_stieltjes(0.05, 0), DomainError);
  CHECK_THROWS_AS(beta_via_stieltjes(0.1, 6, 1), NumericError);
}

TEST_CASE("fixed-point zero from the Laurent series") {
  const auto n4 = beta_via_stieltjes(0.05, 4);
  CHECK(std::abs(n4.beta - golden::kBeta_0p05) <= n4.truncation_bound);
  CHECK(n4.iterations > 0);

  const double exact = golden::kBeta_0p01;
  const auto n2 = beta_via_stieltjes(0.01, 2);
  const auto n6 = beta_via_stieltjes(0.01, 6);
  CHECK(std::abs(n6.beta - exact) < std::abs(n2.beta - exact));

  for (const double a : {0.01, 0.05, 0.1}) {
    const auto r = beta_via_stieltjes(a, 6);
    CHECK(std::abs(r.beta - find_beta(a).beta) <= r.truncation_bound);
    const auto e = stieltjes(a);
    const double b = find_beta(a).beta;
    CHECK(std::abs(stieltjes_beta_map(e, 8, b) - b) <= 1e-9);
  }
}
