#include <cmath>

#include "doctest.h"
#include "slspec/chebyshev.hpp"
#include "slspec/error.hpp"
#include "slspec/potential.hpp"

using namespace slspec;

TEST_CASE("exact polynomials") {
  const auto one = chebyshev_fit([](double) { return 1.0; });
  CHECK(one.degree() == 0);
  CHECK(one.coefficients[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto sq = chebyshev_fit([](double x) { return x * x; });
  REQUIRE(sq.degree() == 2);
  CHECK(sq.coefficients[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(sq.coefficients[1]) <= 1e-16);
  CHECK(sq.coefficients[2] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("interpolant coefficients of T_3") {
  const auto c = chebyshev_interpolant_coefficients([](double x) { return 4 * x * x * x - 3 * x; }, 8);
  for (int k = 0; k <= 8; ++k) CHECK(std::abs(c[k] - (k == 3 ? 1.0 : 0.0)) <= 1e-15);
}

TEST_CASE("smooth factors are resolved to the working tolerance") {
  const char* factors[] = {"exp(10, -1, 1)", "cos(10, 4, 4)", "sin(5, 4, 4)",
                           "cosh(5, 1, 0)",  "log(10, 1, 1.5)", "reciprocal_quadratic(10, 2)"};
  for (const char* f : factors) {
    CAPTURE(f);
    const auto g = parse_factor(f);
    const auto fit = chebyshev_fit(g.value);
    const double scale = sup_norm(g.value);
    double worst = 0, worst_slope = 0;
    for (int i = 0; i < 1000; ++i) {
      const double x = -1 + 2.0 * i / 999;
      worst = std::max(worst, std::abs(fit(x) - g(x)));
      worst_slope = std::max(worst_slope, std::abs(fit.derivative(x) - g.slope(x)));
    }
    CHECK(worst <= 1e-13 * scale);
    CHECK(worst_slope <= 1e-11 * scale);
    CHECK(fit.degree() < 64);
  }
}

TEST_CASE("non-smooth input does not converge") {
  ChebyshevFitOptions opt;
  opt.max_degree = 256;
  CHECK_THROWS_AS(chebyshev_fit([](double x) { return std::abs(x); }, opt), NumericalFailure);
}
