#include <cmath>

#include "doctest.h"
#include "slspec/basis.hpp"
#include "slspec/error.hpp"
#include "slspec/problems.hpp"
#include "slspec/quadrature.hpp"

using namespace slspec;

namespace {

void check_triple(const BasisCoefficients& c, double xi, double eta, double theta) {
  CHECK(c.xi == doctest::Approx(xi).epsilon(1e-13));
  CHECK(std::abs(c.eta - eta) <= 1e-13);
  CHECK(c.theta == doctest::Approx(theta).epsilon(1e-13));
}

double legendre_slope(int j, double x) {
  // P_j'(+-1) from the endpoint formula
  return (x > 0 ? 1.0 : (j % 2 == 0 ? -1.0 : 1.0)) * j * (j + 1) / 2.0;
}

}  // namespace

TEST_CASE("closed-form coefficients for the tabulated conditions") {
  for (int n = 0; n < 200; ++n) {
    const double a = n, b = n + 1.0, c = n + 2.0, d = n + 3.0;
    check_triple(basis_coefficients(named_conditions("dirichlet"), n), 1, 0, -1);
    check_triple(basis_coefficients(named_conditions("neumann"), n), 1, 0, -a * b / (c * d));
    check_triple(basis_coefficients(named_conditions("dirichlet-neumann"), n), 1,
                 (2 * a + 3) / (c * c), -(b * b) / (c * c));
    check_triple(basis_coefficients(named_conditions("neumann-dirichlet"), n), 1,
                 -(2 * a + 3) / (c * c), -(b * b) / (c * c));
    const double den_rn = c * c * (2 + b * d);
    check_triple(basis_coefficients({-1, 1, 0, 1}, n), 1, 2 * (2 * a + 3) / den_rn,
                 -(b * b) * (2 + a * c) / den_rn);
    if (n == 0) {
      check_triple(basis_coefficients(named_conditions("robin"), 0), 2.0 / 3, 1, 1.0 / 3);
    } else {
      // The published theta carries "+ 4"; only "- 4" satisfies the conditions
      // (checked in exact rational arithmetic).
      const double den = b * c * c * d - 4;
      check_triple(basis_coefficients(named_conditions("robin"), n), 1, 4 * (2 * a + 3) / den,
                   -(a * b * b * c - 4) / den);
    }
  }
}

TEST_CASE("spot values") {
  check_triple(basis_coefficients(named_conditions("dirichlet"), 7), 1, 0, -1);
  check_triple(basis_coefficients(named_conditions("neumann"), 1), 1, 0, -1.0 / 6);
}

TEST_CASE("scaling of the conditions does not change the basis") {
  const BoundaryConditions bc{2.0, -0.5, 0.3, 1.7};
  const BoundaryConditions scaled{-6.0, 1.5, 0.6, 3.4};
  for (int n = 0; n < 50; ++n) {
    const auto a = basis_coefficients(bc, n), b = basis_coefficients(scaled, n);
    CHECK(a.xi == doctest::Approx(b.xi).epsilon(1e-14));
    CHECK(a.eta == doctest::Approx(b.eta).epsilon(1e-14));
    CHECK(a.theta == doctest::Approx(b.theta).epsilon(1e-14));
  }
}

TEST_CASE("every basis function satisfies its conditions and is normalized") {
  const BoundaryConditions cases[] = {named_conditions("dirichlet"),
                                      named_conditions("neumann"),
                                      named_conditions("robin"),
                                      named_conditions("robin-neumann"),
                                      {2.0, -0.5, 0.3, 1.7},
                                      {0.0, 1.0, 1.0, 1e-3},
                                      {1.0, 0.25, -3.0, 1.0}};
  for (const auto& bc : cases) {
    for (int n = 0; n < 300; n += 7) {
      const auto c = basis_coefficients(bc, n);
      CHECK(std::max({std::abs(c.xi), std::abs(c.eta), std::abs(c.theta)}) == 1.0);
      CHECK(c.xi >= 0.0);
      const auto e = basis_endpoint_values(c);
      const double scale = 1.0 + (n + 2.0) * (n + 3.0) / 2;
      CHECK(std::abs(bc.alpha_left * e.left + bc.beta_left * e.slope_left) <= 1e-13 * scale);
      CHECK(std::abs(bc.alpha_right * e.right + bc.beta_right * e.slope_right) <= 1e-13 * scale);
      if (bc.symmetric()) CHECK(c.eta == 0.0);
    }
  }
}

TEST_CASE("endpoint values agree with direct Legendre evaluation") {
  const auto c = basis_coefficients(named_conditions("robin"), 4);
  const auto e = basis_endpoint_values(c);
  for (double x : {-1.0, 1.0}) {
    const double v = c.xi * legendre(4, x) + c.eta * legendre(5, x) + c.theta * legendre(6, x);
    const double s = c.xi * legendre_slope(4, x) + c.eta * legendre_slope(5, x) +
                     c.theta * legendre_slope(6, x);
    CHECK((x < 0 ? e.left : e.right) == doctest::Approx(v).epsilon(1e-14));
    CHECK((x < 0 ? e.slope_left : e.slope_right) == doctest::Approx(s).epsilon(1e-14));
  }
  const auto d = basis_endpoint_values(basis_coefficients(named_conditions("dirichlet"), 0));
  CHECK(d.slope_right == doctest::Approx(-3.0));
  CHECK(d.left == 0.0);
}

TEST_CASE("kappa flags") {
  CHECK(kappa_flags(named_conditions("dirichlet")) == EndpointFlags{1, 1});
  CHECK(kappa_flags(named_conditions("neumann")) == EndpointFlags{0, 0});
  CHECK(kappa_flags(named_conditions("dirichlet-neumann")) == EndpointFlags{1, 0});
  CHECK(kappa_flags(named_conditions("neumann-dirichlet")) == EndpointFlags{0, 1});
}

TEST_CASE("degenerate conditions are rejected") {
  CHECK_THROWS_AS(basis_coefficients({0, 0, 1, 0}, 0), InvalidInput);
  CHECK_THROWS_AS(basis_coefficients({1, 0, 0, 0}, 0), InvalidInput);
  CHECK_THROWS_AS(basis_coefficients({1, 0, 1, 0}, -1), InvalidInput);
}

TEST_CASE("basis table matches the direct computation") {
  const BasisTable table(named_conditions("robin"), 40);
  REQUIRE(table.size() == 40);
  for (int n = 0; n < 40; ++n) {
    const auto c = basis_coefficients(named_conditions("robin"), n);
    CHECK(table[n].xi == c.xi);
    CHECK(table[n].eta == c.eta);
    CHECK(table[n].theta == c.theta);
  }
  CHECK(table.first(5).size() == 5);
}

TEST_CASE("large-n behaviour") {
  const struct {
    BoundaryConditions bc;
    int eta_power;  // 0: eta == 0, 1: O(1/n), 3: O(1/n^3)
  } cases[] = {{named_conditions("dirichlet"), 0},      {named_conditions("neumann"), 0},
               {named_conditions("robin"), 3},          {named_conditions("robin-neumann"), 3},
               {named_conditions("dirichlet-neumann"), 1}, {named_conditions("neumann-dirichlet"), 1},
               {{1.0, 0.25, -3.0, 1.0}, 3}};
  for (const auto& c : cases) {
    for (int n : {1000, 10000}) {
      CAPTURE(n);
      const auto b = basis_coefficients(c.bc, n);
      const double C = 10.0;
      CHECK(b.xi == 1.0);
      CHECK(std::abs(b.theta + 1) <= C / n);
      if (c.eta_power == 0) CHECK(b.eta == 0.0);
      if (c.eta_power == 1) CHECK(std::abs(b.eta) <= C / n);
      if (c.eta_power == 3) CHECK(std::abs(b.eta) <= C / (double(n) * n * n));
      CHECK(std::abs((b.xi - b.theta) / 2 - 1) <= 10.0 / n);
      const auto e = basis_endpoint_values(b);
      if (std::abs(e.left) > 1e-12) {
        CHECK(std::abs(std::abs(b.xi - b.eta + b.theta) * (n + 1.5) / 4 - 1) <= 10.0 / n);
      }
      if (std::abs(e.right) > 1e-12) {
        CHECK(std::abs(std::abs(b.xi + b.eta + b.theta) * (n + 1.5) / 4 - 1) <= 10.0 / n);
      }
    }
  }
}
