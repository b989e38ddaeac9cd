#include <cmath>
#include <numbers>

#include "doctest.h"
#include "slspec/correction.hpp"
#include "slspec/eigensolver.hpp"
#include "slspec/error.hpp"
#include "slspec/harness.hpp"
#include "slspec/problems.hpp"
#include "slspec/special.hpp"

using namespace slspec;

TEST_CASE("hat endpoint values") {
  const EndpointValues z{0.5, -2.0, 3.0, 4.0};
  auto h = hat_endpoint_values(z, {0, 0});
  CHECK(h.left == 0.5);
  CHECK(h.right == -2.0);
  h = hat_endpoint_values(z, {1, 0});
  CHECK(h.left == 3.0);
  CHECK(h.right == -1.0);
  // z = 1 - x^2
  h = hat_endpoint_values({0.0, 0.0, 2.0, -2.0}, {1, 1});
  CHECK(h.left == 1.0);
  CHECK(h.right == 1.0);
}

TEST_CASE("omega factors") {
  CHECK(omega_hat(0.5, 0.5) == doctest::Approx(std::sqrt(std::numbers::pi) /
                                               std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(omega_hat(0.25, 0.75) ==
        doctest::Approx(gamma_function(0.75) / gamma_function(0.25)).epsilon(1e-15));
  for (double d : {0.0, -1.0, -2.0}) CHECK(omega_hat(d, 0.3) == 0.0);
  CHECK(omega(1, 0.25, 0.75) == doctest::Approx(2 * 0.75 * omega_hat(0.25, 0.75)).epsilon(1e-15));
  CHECK(order_exponent(0.25) == 5.0);
}

TEST_CASE("predicted orders") {
  const auto p = [](const char* pot, const char* bc) {
    const auto spec = make_problem(pot, bc);
    return predicted_order(spec.terms, kappa_flags(spec.bc)).p;
  };
  CHECK(p("q1", "neumann-dirichlet") == 5.0);
  CHECK(p("q1", "dirichlet-neumann") == 3.0);
  CHECK(p("q1", "neumann") == 3.0);
  CHECK(p("q2", "neumann-dirichlet") == 4.0);
  CHECK(p("q2", "dirichlet-neumann") == 2.5);
  CHECK(p("q2", "robin") == 2.5);
  CHECK(p("q3-0.5", "neumann") == 4.0);
  CHECK(p("q4-0.8", "robin-neumann") == doctest::Approx(2.8).epsilon(1e-15));
  CHECK(std::isinf(p("free", "neumann")));
}

TEST_CASE("endpoint data of q2") {
  const auto spec = make_problem("q2", "neumann-dirichlet");
  const auto data = endpoint_data(spec.terms, kappa_flags(spec.bc));
  REQUIRE(data.terms.size() == 2);
  // sin(4(1+x)) vanishes at -1: hat gamma = 3/4 - 1 and ghat(-1) = g'(-1) = 20
  CHECK(data.terms[1].hat_gamma == doctest::Approx(-0.25));
  CHECK(data.terms[1].ghat_left == doctest::Approx(20.0).epsilon(1e-13));
  CHECK(data.terms[1].hat_beta == doctest::Approx(-0.125));
  CHECK(data.terms[0].hat_beta == -1.0);
  CHECK(data.terms[0].sigma_right == 0.0);
  CHECK(data.terms[0].sigma_left != 0.0);
}

TEST_CASE("delta hat") {
  EndpointData zero{{0, 0}, {TermEndpointData{}}};
  CHECK(delta_hat(0, 0, 50, zero, {1.0, 1.0}) == 0.0);

  EndpointData one{{0, 0}, {TermEndpointData{}}};
  one.terms[0].hat_gamma = 0.25;
  one.terms[0].sigma_left = 1.7;
  const double p = order_exponent(0.25);
  const double z = 0.8;
  CHECK(delta_hat(0, 0, 60, one, {z, -0.3}) ==
        doctest::Approx(2 * 1.7 * 1.7 * z * z / (2 * p * std::pow(61.0, p))).epsilon(1e-14));
}

TEST_CASE("integer effective exponents switch the endpoint off") {
  // g vanishes at -1 and gamma = 0 so hat gamma = -1 on a Neumann end
  std::vector<PotentialTerm> terms{{parse_factor("sin(5, 4, 4)"), {0.5, 0.0}, 0, 1}};
  const auto data = endpoint_data(terms, {0, 0});
  CHECK(data.terms[0].hat_gamma == -1.0);
  CHECK(data.terms[0].sigma_left == 0.0);
  for (int N : {20, 21}) CHECK(delta_hat(0, 0, N, data, {1.0, 0.0}) == 0.0);
}

TEST_CASE("correction is refused for bounded potentials") {
  const auto spec = make_problem("free", "dirichlet");
  const auto sys = assemble(spec.problem(), 20);
  const auto pairs = solve_pencil(sys, 1);
  CHECK_THROWS_AS(corrected_eigenvalue(pairs[0], sys, spec.terms), InvalidInput);
}

TEST_CASE("correction gains two digits for q3 with beta = 1/2") {
  const auto spec = make_problem("q3-0.5", "neumann");
  const auto ref = solve_point(spec, 1600, 5, {true, true});
  const auto at = solve_point(spec, 100, 5, {true, true});
  const double lbar = ref.mu[4];
  CHECK(std::abs(at.mu[4] - lbar) * 100 <= std::abs(at.lambda[4] - lbar));
}

TEST_CASE("correction improves every eigenvalue of q2 in the asymptotic range") {
  for (const char* bc : {"neumann-dirichlet", "robin"}) {
    CAPTURE(bc);
    const auto spec = make_problem("q2", bc);
    const auto ref = solve_point(spec, 1601, 15);
    for (int N : {60, 100, 150, 200}) {
      const auto at = solve_point(spec, N, 15);
      for (int k = 1; k <= 15 && 4 * k <= N; ++k) {
        CAPTURE(N);
        CAPTURE(k);
        CHECK(std::abs(at.mu[k - 1] - ref.mu[k - 1]) <= std::abs(at.lambda[k - 1] - ref.mu[k - 1]));
      }
      if (N != 60 && N != 150) {
        // mu at N beats lambda at 2N
        const auto doubled = solve_point(spec, 2 * N, 15, {false, false});
        CHECK(std::abs(at.mu[14] - ref.mu[14]) < std::abs(doubled.lambda[14] - ref.mu[14]));
      }
    }
  }
}

TEST_CASE("observed orders of the uncorrected eigenvalues") {
  for (const char* bc : {"neumann-dirichlet", "dirichlet-neumann"}) {
    CAPTURE(bc);
    const auto spec = make_problem("q2", bc);
    SweepOptions opt;
    opt.k_set = {5};
    opt.N_grid = {99, 149, 199, 299, 399, 599, 799};
    opt.Nt = 1601;
    opt.orders = false;
    opt.richardson = false;
    const auto r = run_sweep(spec, opt);
    CHECK(r.fits[0].p_lambda == doctest::Approx(r.p_predicted).epsilon(0.15 / r.p_predicted));
  }
}
