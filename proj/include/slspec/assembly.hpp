#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "slspec/basis.hpp"
#include "slspec/chebyshev.hpp"
#include "slspec/potential.hpp"

namespace slspec {

/// Symmetric pentadiagonal matrix stored by its three upper diagonals.
struct PentadiagonalMatrix {
  std::vector<double> diag0;  // b_{n,n}
  std::vector<double> diag1;  // b_{n,n+1}
  std::vector<double> diag2;  // b_{n,n+2}

  int size() const { return static_cast<int>(diag0.size()); }
  double operator()(int m, int n) const;
  Eigen::MatrixXd dense() const;
};

/// Galerkin matrices of (A + Q) zeta = lambda B zeta in the basis R_0..R_{N-1}.
struct GalerkinSystem {
  int N = 0;
  BoundaryConditions bc;
  EndpointFlags flags;
  std::vector<BasisCoefficients> basis;
  Eigen::VectorXd stiffness_diagonal;  // A (diagonal)
  PentadiagonalMatrix mass;            // B
  Eigen::MatrixXd potential;           // Q (symmetrized)
  /// max |Q - Q^T| before symmetrization.
  double potential_asymmetry = 0.0;
};

/// g(H) v by Clenshaw's recurrence, H the truncated Legendre Jacobi
/// operator (h_{m,m-1} = m/(2m+1), h_{m,m+1} = (m+1)/(2m+1)). Returns the
/// first `exact_count` entries, which are unaffected by truncation when
/// v.size() >= exact_count + degree + 2.
std::vector<double> apply_g_of_H(const ChebyshevApproximant& fit, std::span<const double> v,
                                 int exact_count);

/// Legendre-space potential matrix (N+2)x(N+2) from its first column
/// q0[m] = <P_m, q>, m = 0..2N+2, via the three-term column recurrence.
Eigen::MatrixXd qhat_matrix(std::span<const double> q0, int N);

/// First column <P_m, q_term>, m = 0..count-1, of one potential term.
std::vector<double> potential_first_column(const PotentialTerm& term, int count);

/// Sum of the Legendre-space matrices of all terms, (N+2)x(N+2).
Eigen::MatrixXd legendre_potential_matrix(std::span<const PotentialTerm> terms, int N);

/// R^T M R for the banded basis-change matrix R ((N+2) x N).
Eigen::MatrixXd basis_congruence(std::span<const BasisCoefficients> basis,
                                 const Eigen::MatrixXd& legendre_matrix);

GalerkinSystem assemble(const Problem& problem, int N);

/// One decoupled half of a parity-split system.
struct GalerkinBlock {
  Eigen::VectorXd stiffness_diagonal;
  Eigen::MatrixXd mass;
  Eigen::MatrixXd potential;
  std::vector<int> indices;  // positions in the full coefficient vector
};

struct SplitSystem {
  GalerkinBlock even;
  GalerkinBlock odd;
};

/// Even/odd permutation of a system with symmetric conditions and an even
/// potential. Throws InvalidInput if the system does not decouple.
SplitSystem symmetric_split(const GalerkinSystem& sys, bool potential_is_even);

}  // namespace slspec
