#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "doctest.h"
#include "slspec/assembly.hpp"
#include "slspec/eigensolver.hpp"
#include "slspec/error.hpp"
#include "slspec/problems.hpp"
#include "slspec/quadrature.hpp"

using namespace slspec;

namespace {

PotentialTerm term(const std::string& expr, double beta, double gamma, int r = 0, int l = 0) {
  return {parse_factor(expr), {beta, gamma}, r, l};
}

double basis_value(const BasisCoefficients& c, double x) {
  return c.xi * legendre(c.n, x) + c.eta * legendre(c.n + 1, x) + c.theta * legendre(c.n + 2, x);
}

}  // namespace

TEST_CASE("g(H) of a constant and of x") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
  const auto c = apply_g_of_H(chebyshev_fit([](double) { return 2.5; }), v, 3);
  REQUIRE(c.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c[i] == doctest::Approx(2.5 * v[i]).epsilon(1e-15));

  const std::vector<double> e0{1, 0, 0, 0, 0, 0};
  const auto h = apply_g_of_H(chebyshev_fit([](double x) { return x; }), e0, 3);
  CHECK(std::abs(h[0]) <= 1e-16);
  CHECK(h[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(std::abs(h[2]) <= 1e-16);

  CHECK_THROWS_AS(apply_g_of_H(chebyshev_fit([](double x) { return x; }), e0, 5), InvalidInput);
}

TEST_CASE("first column against Gauss-Jacobi quadrature") {
  const auto t = term("exp(10, -1, 1)", 0.75, 0.25);
  const int N = 60;
  const auto col = potential_first_column(t, 2 * N + 3);
  const auto rule = gauss_jacobi(200, -0.75, -0.25);
  for (int m = 0; m < 2 * N + 3; ++m) {
    double ref = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      ref += rule.weights[i] * legendre(m, rule.nodes[i]) * t.g(rule.nodes[i]);
    }
    CAPTURE(m);
    CHECK(std::abs(col[m] - ref) <= 1e-11 * std::abs(col[0]));
  }
}

TEST_CASE("Legendre-space matrix of simple potentials") {
  const std::vector<double> q0{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  const auto gram = qhat_matrix(q0, 5);
  REQUIRE(gram.rows() == 7);
  for (int m = 0; m < 7; ++m) {
    for (int n = 0; n < 7; ++n) {
      CHECK(std::abs(gram(m, n) - (m == n ? 2.0 / (2 * n + 1) : 0.0)) <= 1e-15);
    }
  }

  const int N = 20;
  const std::vector<PotentialTerm> x_term{term("polynomial(0, 1)", 0, 0)};
  const auto hat = legendre_potential_matrix(x_term, N);
  const auto rule = gauss_legendre(30);
  for (int m = 0; m < N + 2; ++m) {
    for (int n = 0; n < N + 2; ++n) {
      double ref = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        ref += rule.weights[i] * legendre(m, x) * x * legendre(n, x);
      }
      CHECK(std::abs(hat(m, n) - ref) <= 1e-14);
    }
  }
}

TEST_CASE("column recurrence starts from H q_0") {
  const auto col = potential_first_column(term("exp(10, -1, 1)", 0.75, 0.25), 2 * 10 + 3);
  const auto hat = qhat_matrix(col, 10);
  for (int m = 1; m < 12; ++m) {
    const double h = m / (2.0 * m + 1) * col[m - 1] + (m + 1) / (2.0 * m + 1) * col[m + 1];
    CHECK(hat(m, 1) == doctest::Approx(h).epsilon(1e-14));
  }
}

TEST_CASE("potential matrix against quadrature") {
  const struct {
    const char* potential;
    const char* bc;
  } cases[] = {{"q1", "neumann-dirichlet"}, {"q2", "robin"}, {"q4-0.4", "robin-neumann"}};
  for (const auto& c : cases) {
    CAPTURE(c.potential);
    const auto spec = make_problem(c.potential, c.bc);
    const int N = 24;
    const auto sys = assemble(spec.problem(), N);
    Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(N, N);
    for (const auto& t : spec.terms) {
      const auto rule = gauss_jacobi(400, -t.exponents.beta, -t.exponents.gamma);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        Eigen::VectorXd r(N);
        for (int n = 0; n < N; ++n) r[n] = basis_value(sys.basis[n], x);
        ref += rule.weights[i] * t.g(x) * r * r.transpose();
      }
    }
    CHECK((sys.potential - ref).cwiseAbs().maxCoeff() <= 1e-10 * ref.cwiseAbs().maxCoeff());
    CHECK(sys.potential_asymmetry <= 1e-10 * ref.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("stiffness and mass for the free problem") {
  const auto sys = assemble(make_problem("free", "dirichlet").problem(), 5);
  for (int n = 0; n < 5; ++n) {
    CHECK(sys.stiffness_diagonal[n] == doctest::Approx(2.0 * (2 * n + 3)).epsilon(1e-15));
    CHECK(sys.mass(n, n) == doctest::Approx(2.0 / (2 * n + 1) + 2.0 / (2 * n + 5)).epsilon(1e-15));
  }
  CHECK(sys.potential.cwiseAbs().maxCoeff() == 0.0);
  const auto neu = assemble(make_problem("free", "neumann").problem(), 5);
  CHECK(neu.stiffness_diagonal[0] == 0.0);
}

TEST_CASE("mass matrix is symmetric positive definite and pentadiagonal") {
  for (const auto& name : condition_names()) {
    CAPTURE(name);
    const auto sys = assemble(make_problem("free", name).problem(), 40);
    const Eigen::MatrixXd B = sys.mass.dense();
    CHECK((B - B.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        if (std::abs(i - j) > 2) CHECK(B(i, j) == 0.0);
      }
    }
    CHECK(Eigen::LLT<Eigen::MatrixXd>(B).info() == Eigen::Success);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(B).eigenvalues().minCoeff() > 0.0);

    // Gram matrix of the basis functions
    const auto rule = gauss_legendre(50);
    for (int m : {0, 3, 17}) {
      for (int n : {m, m + 1, m + 2}) {
        double ref = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          ref += rule.weights[i] * basis_value(sys.basis[m], rule.nodes[i]) *
                 basis_value(sys.basis[n], rule.nodes[i]);
        }
        CHECK(std::abs(B(m, n) - ref) <= 1e-14);
      }
    }
  }
}

TEST_CASE("assembly rejects small truncations") {
  CHECK_THROWS_AS(assemble(make_problem("q1", "neumann").problem(), 3), InvalidInput);
}

TEST_CASE("parity split reproduces the full spectrum") {
  const struct {
    const char* potential;
    const char* bc;
    int N;
  } cases[] = {{"free", "dirichlet", 8}, {"q3-0.5", "neumann", 60}, {"intro", "neumann", 60}};
  for (const auto& c : cases) {
    CAPTURE(c.potential);
    const auto spec = make_problem(c.potential, c.bc);
    const auto sys = assemble(spec.problem(), c.N);
    const int k = c.N / 2;
    const auto full = solve_pencil(sys, k);
    const auto split = solve_pencil(sys, k, {true, true});
    for (int i = 0; i < k; ++i) {
      CHECK(std::abs(full[i].lambda - split[i].lambda) <= 1e-11 * std::abs(full[i].lambda) + 1e-13);
    }
    // odd eigenfunctions vanish at the origin
    for (const auto& p : split) {
      double z0 = 0, scale = 0;
      for (int n = 0; n < c.N; ++n) {
        z0 += p.zeta[n] * basis_value(sys.basis[n], 0.0);
        scale += std::abs(p.zeta[n]);
      }
      if (p.index % 2 == 0) CHECK(std::abs(z0) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("split requires symmetric data") {
  const auto sys = assemble(make_problem("q1", "neumann").problem(), 20);
  CHECK_THROWS_AS(symmetric_split(sys, false), InvalidInput);
  const auto robin = assemble(make_problem("free", "robin-neumann").problem(), 20);
  CHECK_THROWS_AS(symmetric_split(robin, true), InvalidInput);
}

TEST_CASE("stiffness diagonal grows like 4(n + 3/2)") {
  for (const auto& name : condition_names()) {
    const auto sys = assemble(make_problem("free", name).problem(), 1001);
    const int n = 1000;
    CHECK(std::abs(sys.stiffness_diagonal[n] / (4 * (n + 1.5)) - 1) <= 10.0 / n);
  }
}
