#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slspec/assembly.hpp"

namespace slspec {

struct EigenPair {
  int index = 0;  // 1-based
  double lambda = 0.0;
  Eigen::VectorXd zeta;
  double residual = 0.0;
};

struct PencilOptions {
  /// Solve the even and odd halves separately (symmetric problems only).
  bool split = false;
  /// Declares q(x) = q(-x); required together with `split`.
  bool potential_is_even = false;
  /// Spectral shift s with A + Q + sB positive definite; NaN selects one.
  double shift = std::numeric_limits<double>::quiet_NaN();
};

struct DensePencilSolution {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, arbitrary scale
  double shift = 0.0;
};

/// The `count` algebraically smallest eigenpairs of K x = lambda M x with
/// M symmetric positive definite. Internally solves M x = nu (K + sM) x by
/// Cholesky reduction of K + sM and maps back lambda = 1/nu - s, which keeps
/// the wanted eigenvalues at the top of a bounded spectrum.
DensePencilSolution smallest_generalized_eigenpairs(const Eigen::MatrixXd& stiffness,
                                                    const Eigen::MatrixXd& mass, int count,
                                                    double shift);

/// k_max smallest eigenpairs of (A + Q) zeta = lambda B zeta, strictly
/// increasing, B-orthonormal, with the sign convention zhat_N(-1) > 0.
std::vector<EigenPair> solve_pencil(const GalerkinSystem& sys, int k_max,
                                    const PencilOptions& options = {});

/// Rescales to zeta^T B zeta = 1 and fixes the sign so that zhat_N(-1) > 0.
EigenPair normalize(EigenPair pair, const GalerkinSystem& sys, EndpointFlags flags);

/// ||(A+Q) zeta - lambda B zeta|| / max(||(A+Q) zeta||, ||B zeta||).
double pencil_residual(const GalerkinSystem& sys, const Eigen::VectorXd& zeta, double lambda);

/// zeta^T (A+Q) zeta / zeta^T B zeta accumulated in long double. solve_pencil
/// reports this value as lambda.
double rayleigh_quotient(const GalerkinSystem& sys, const Eigen::VectorXd& zeta);

/// B zeta using the banded mass matrix.
Eigen::VectorXd apply_mass(const PentadiagonalMatrix& mass, const Eigen::VectorXd& zeta);

}  // namespace slspec
