#include "slspec/basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "slspec/error.hpp"
#include "slspec/special.hpp"

namespace slspec {
namespace {

double legendre_at_minus_one(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

double legendre_slope_at_one(int j) { return 0.5 * j * (j + 1.0); }

double legendre_slope_at_minus_one(int j) {
  return (j % 2 == 0 ? -1.0 : 1.0) * legendre_slope_at_one(j);
}

// Boundary functional applied to P_n, P_{n+1}, P_{n+2}.
std::array<double, 3> left_row(const BoundaryConditions& bc, int n) {
  std::array<double, 3> row{};
  for (int i = 0; i < 3; ++i) {
    const int j = n + i;
    row[i] = bc.alpha_left * legendre_at_minus_one(j) +
             bc.beta_left * legendre_slope_at_minus_one(j);
  }
  return row;
}

std::array<double, 3> right_row(const BoundaryConditions& bc, int n) {
  std::array<double, 3> row{};
  for (int i = 0; i < 3; ++i) {
    const int j = n + i;
    row[i] = bc.alpha_right + bc.beta_right * legendre_slope_at_one(j);
  }
  return row;
}

BasisCoefficients normalized(int n, std::array<double, 3> v) {
  const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  if (scale == 0.0) {
    throw InvalidInput("basis_coefficients: degenerate boundary conditions at n = " +
                       std::to_string(n));
  }
  for (auto& x : v) x /= scale;
  const bool flip = v[0] < 0.0 || (v[0] == 0.0 && (v[1] < 0.0 || (v[1] == 0.0 && v[2] < 0.0)));
  if (flip) {
    for (auto& x : v) x = -x;
  }
  // Clean -0.0 so the sign convention is visible in printed output.
  for (auto& x : v) {
    if (x == 0.0) x = 0.0;
  }
  return {n, v[0], v[1], v[2]};
}

}  // namespace

void BoundaryConditions::validate() const {
  if (alpha_left == 0.0 && beta_left == 0.0) {
    throw InvalidInput("boundary condition at x = -1 is identically zero");
  }
  if (alpha_right == 0.0 && beta_right == 0.0) {
    throw InvalidInput("boundary condition at x = +1 is identically zero");
  }
  if (!std::isfinite(alpha_left) || !std::isfinite(beta_left) || !std::isfinite(alpha_right) ||
      !std::isfinite(beta_right)) {
    throw InvalidInput("boundary condition coefficients must be finite");
  }
}

bool BoundaryConditions::symmetric() const {
  return alpha_left * beta_right + alpha_right * beta_left == 0.0;
}

BasisCoefficients basis_coefficients(const BoundaryConditions& bc, int n) {
  bc.validate();
  if (n < 0) throw InvalidInput("basis_coefficients: negative degree");
  const auto l = left_row(bc, n);
  const auto r = right_row(bc, n);

  if (bc.symmetric()) {
    // eta = 0; a single equation xi*row[0] + theta*row[2] = 0 remains.
    const auto& row =
        (std::abs(l[0]) + std::abs(l[2]) >= std::abs(r[0]) + std::abs(r[2])) ? l : r;
    return normalized(n, {row[2], 0.0, -row[0]});
  }

  // Null vector of the 2x3 system as the cross product of its rows.
  const std::array<double, 3> v{difference_of_products(l[1], r[2], l[2], r[1]),
                                difference_of_products(l[2], r[0], l[0], r[2]),
                                difference_of_products(l[0], r[1], l[1], r[0])};
  return normalized(n, v);
}

EndpointValues basis_endpoint_values(const BasisCoefficients& c) {
  const int n = c.n;
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const double s0 = legendre_slope_at_one(n);
  const double s1 = legendre_slope_at_one(n + 1);
  const double s2 = legendre_slope_at_one(n + 2);
  EndpointValues e;
  e.right = c.xi + c.eta + c.theta;
  e.left = parity * (c.xi - c.eta + c.theta);
  e.slope_right = c.xi * s0 + c.eta * s1 + c.theta * s2;
  e.slope_left = -parity * (c.xi * s0 - c.eta * s1 + c.theta * s2);
  return e;
}

EndpointFlags kappa_flags(const BoundaryConditions& bc) {
  bc.validate();
  return {bc.beta_left == 0.0 ? 1 : 0, bc.beta_right == 0.0 ? 1 : 0};
}

EndpointValues expansion_endpoint_values(std::span<const BasisCoefficients> basis,
                                         std::span<const double> zeta) {
  if (basis.size() < zeta.size()) {
    throw InvalidInput("expansion_endpoint_values: basis shorter than coefficient vector");
  }
  EndpointValues sum;
  for (std::size_t n = 0; n < zeta.size(); ++n) {
    const auto e = basis_endpoint_values(basis[n]);
    sum.left += zeta[n] * e.left;
    sum.right += zeta[n] * e.right;
    sum.slope_left += zeta[n] * e.slope_left;
    sum.slope_right += zeta[n] * e.slope_right;
  }
  return sum;
}

BasisTable::BasisTable(const BoundaryConditions& bc, int count) : bc_(bc) {
  if (count < 0) throw InvalidInput("BasisTable: negative size");
  coefficients_.reserve(count);
  for (int n = 0; n < count; ++n) coefficients_.push_back(basis_coefficients(bc, n));
}

}  // namespace slspec
