#include <cmath>
#include <numbers>

#include "doctest.h"
#include "slspec/error.hpp"
#include "slspec/special.hpp"

using namespace slspec;

TEST_CASE("gamma values") {
  CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(gamma_function(-0.5) == doctest::Approx(-2 * std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(gamma_function(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_function(-2.0), InvalidInput);
  CHECK(reciprocal_gamma(-3.0) == 0.0);
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(log_gamma(-0.5).sign == -1);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-2.0, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(is_nonpositive_integer(-4.0));
  CHECK_FALSE(is_nonpositive_integer(-4.5));
  CHECK_FALSE(is_nonpositive_integer(1.0));
}

TEST_CASE("difference of products keeps cancellation exact") {
  const double a = 1 + 0x1p-30, b = 1 - 0x1p-30;
  CHECK(difference_of_products(a, b, 1.0, 1.0) == -0x1p-60);
}
