#include "slspec/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "slspec/error.hpp"

namespace slspec {
namespace {

struct JacobiValue {
  double value;
  double slope;
};

// P_n^{(a,b)}(x) and its derivative.
JacobiValue jacobi_with_slope(int n, double a, double b, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double a2 = (s - 1.0) * (a * a - b * b);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
    p_prev = p;
    p = next;
  }
  const double s = 2.0 * n + a + b;
  const double slope =
      (n * (a - b - s * x) * p + 2.0 * (n + a) * (n + b) * p_prev) / (s * (1.0 - x * x));
  return {p, slope};
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw InvalidInput("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw InvalidInput("gauss_jacobi: exponents must exceed -1");

  QuadratureRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (int k = 0; k < n; ++k) {
    double x = -std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
    if (k > 0) x = 0.5 * (x + rule.nodes.back());
    for (int it = 0; it < 100; ++it) {
      double deflation = 0.0;
      for (double root : rule.nodes) deflation += 1.0 / (x - root);
      const auto jv = jacobi_with_slope(n, a, b, x);
      const double dx = -jv.value / (jv.slope - deflation * jv.value);
      x += dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    rule.nodes.push_back(x);
  }

  const double log_c = (a + b + 1.0) * std::log(2.0) + std::lgamma(n + a + 1.0) +
                       std::lgamma(n + b + 1.0) - std::lgamma(n + 1.0) -
                       std::lgamma(n + a + b + 1.0);
  const double c = std::exp(log_c);
  for (double x : rule.nodes) {
    const double slope = jacobi_with_slope(n, a, b, x).slope;
    rule.weights.push_back(c / ((1.0 - x * x) * slope * slope));
  }
  return rule;
}

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = next;
  }
  return p;
}

std::vector<double> legendre_all(int n, double x) {
  std::vector<double> p(n + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = x;
  for (int k = 1; k < n; ++k) p[k + 1] = ((2.0 * k + 1.0) * x * p[k] - k * p[k - 1]) / (k + 1.0);
  return p;
}

}  // namespace slspec
