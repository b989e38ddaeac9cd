#pragma once

#include <vector>

namespace slspec {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on (-1,1),
/// a, b > -1. Nodes by Newton iteration with deflation, weights from the
/// derivative formula; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_jacobi(int n, double a, double b);

inline QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Legendre polynomial P_n(x) by three-term recurrence.
double legendre(int n, double x);

/// P_0(x) .. P_n(x).
std::vector<double> legendre_all(int n, double x);

}  // namespace slspec
