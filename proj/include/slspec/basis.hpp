#pragma once

#include <span>
#include <vector>

namespace slspec {

/// Separated Robin conditions
///   alpha_left  y(-1) + beta_left  y'(-1) = 0,
///   alpha_right y(+1) + beta_right y'(+1) = 0.
struct BoundaryConditions {
  double alpha_left = 1.0;
  double beta_left = 0.0;
  double alpha_right = 1.0;
  double beta_right = 0.0;

  /// Throws InvalidInput if either condition is identically zero.
  void validate() const;

  /// Exact test alpha_L beta_R + alpha_R beta_L == 0 (no tolerance).
  bool symmetric() const;

  bool operator==(const BoundaryConditions&) const = default;
};

/// R_n = xi P_n + eta P_{n+1} + theta P_{n+2}.
struct BasisCoefficients {
  int n = 0;
  double xi = 0.0;
  double eta = 0.0;
  double theta = 0.0;
};

struct EndpointValues {
  double left = 0.0;          // R(-1)
  double right = 0.0;         // R(+1)
  double slope_left = 0.0;    // R'(-1)
  double slope_right = 0.0;   // R'(+1)
};

/// kappa = 1 where the condition is pure Dirichlet, so every R_n vanishes.
struct EndpointFlags {
  int kappa_minus = 0;
  int kappa_plus = 0;

  bool operator==(const EndpointFlags&) const = default;
};

/// Coefficients of R_n satisfying both boundary conditions, normalized so
/// that max(|xi|, |eta|, |theta|) = 1 with xi >= 0 (ties broken on eta,
/// then theta). Symmetric conditions get eta = 0 exactly.
BasisCoefficients basis_coefficients(const BoundaryConditions& bc, int n);

EndpointValues basis_endpoint_values(const BasisCoefficients& c);

EndpointFlags kappa_flags(const BoundaryConditions& bc);

/// Endpoint values of z = sum_n zeta_n R_n.
EndpointValues expansion_endpoint_values(std::span<const BasisCoefficients> basis,
                                         std::span<const double> zeta);

/// Immutable table of basis coefficients for n = 0 .. size()-1.
class BasisTable {
 public:
  BasisTable(const BoundaryConditions& bc, int count);

  const BoundaryConditions& conditions() const { return bc_; }
  int size() const { return static_cast<int>(coefficients_.size()); }
  const BasisCoefficients& operator[](int n) const { return coefficients_[n]; }
  std::span<const BasisCoefficients> coefficients() const { return coefficients_; }
  std::span<const BasisCoefficients> first(int count) const {
    return std::span<const BasisCoefficients>(coefficients_).first(count);
  }

 private:
  BoundaryConditions bc_;
  std::vector<BasisCoefficients> coefficients_;
};

}  // namespace slspec
