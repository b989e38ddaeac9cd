#include "slspec/eigensolver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slspec/correction.hpp"
#include "slspec/error.hpp"

namespace slspec {
namespace {

constexpr double kResidualTolerance = 1e-10;

struct ReducedSolve {
  bool definite = false;
  Eigen::VectorXd nu;
  Eigen::MatrixXd vectors;
};

ReducedSolve solve_shifted(const Eigen::MatrixXd& stiffness, const Eigen::MatrixXd& mass,
                           int count, double shift) {
  const auto n = static_cast<lapack_int>(mass.rows());
  Eigen::MatrixXd a = mass;  // overwritten by LAPACK
  Eigen::MatrixXd b = stiffness + shift * mass;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, count);
  std::vector<lapack_int> ifail(n);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsygvx(
      LAPACK_COL_MAJOR, 1, 'V', 'I', 'U', n, a.data(), n, b.data(), n, 0.0, 0.0, n - count + 1,
      n, 2.0 * LAPACKE_dlamch('S'), &found, w.data(), z.data(), n, ifail.data());
  ReducedSolve out;
  if (info > n) return out;  // K + sM not positive definite
  if (info != 0) {
    throw NumericalFailure("dsygvx failed with info = " + std::to_string(info));
  }
  out.definite = true;
  out.nu = w.head(found);
  out.vectors = z.leftCols(found);
  return out;
}

}  // namespace

Eigen::VectorXd apply_mass(const PentadiagonalMatrix& mass, const Eigen::VectorXd& zeta) {
  const int n = mass.size();
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double s = mass.diag0[i] * zeta[i];
    if (i + 1 < n) s += mass.diag1[i] * zeta[i + 1];
    if (i >= 1) s += mass.diag1[i - 1] * zeta[i - 1];
    if (i + 2 < n) s += mass.diag2[i] * zeta[i + 2];
    if (i >= 2) s += mass.diag2[i - 2] * zeta[i - 2];
    out[i] = s;
  }
  return out;
}

DensePencilSolution smallest_generalized_eigenpairs(const Eigen::MatrixXd& stiffness,
                                                    const Eigen::MatrixXd& mass, int count,
                                                    double shift) {
  const int n = static_cast<int>(mass.rows());
  if (count < 1 || count > n) {
    throw InvalidInput("requested " + std::to_string(count) + " eigenpairs of a size-" +
                       std::to_string(n) + " pencil");
  }
  // The mass matrix must be SPD on its own.
  if (Eigen::LLT<Eigen::MatrixXd>(mass).info() != Eigen::Success) {
    throw InvalidInput("mass matrix is not positive definite");
  }

  const bool automatic = std::isnan(shift);
  double s = automatic ? 1.0 : shift;
  ReducedSolve r = solve_shifted(stiffness, mass, count, s);
  for (int attempt = 0; automatic && !r.definite && attempt < 40; ++attempt) {
    s = 4.0 * s + 1.0;
    r = solve_shifted(stiffness, mass, count, s);
  }
  if (!r.definite) {
    throw NumericalFailure("no shift made the pencil definite (last shift " + std::to_string(s) +
                           ")");
  }
  if (automatic) {
    // Re-centre so that the lowest shifted eigenvalue sits near 1 + |lambda_1|;
    // too small a gap to zero amplifies round-off through 1/nu.
    const double lambda_min = 1.0 / r.nu[r.nu.size() - 1] - s;
    const double target = 1.0 + std::abs(lambda_min) - lambda_min;
    if (std::abs(target - s) > 0.5 * std::max(1.0, std::abs(s))) {
      ReducedSolve again = solve_shifted(stiffness, mass, count, target);
      if (again.definite) {
        r = std::move(again);
        s = target;
      }
    }
  }
  if (r.nu.size() != count) throw NumericalFailure("eigensolver returned too few eigenpairs");
  if ((r.nu.array() <= 0.0).any()) throw NumericalFailure("non-positive shifted eigenvalue");

  DensePencilSolution out;
  out.shift = s;
  out.values.resize(count);
  out.vectors.resize(n, count);
  // dsygvx returns nu ascending, so lambda = 1/nu - s descends; reverse.
  for (int j = 0; j < count; ++j) {
    const int src = count - 1 - j;
    out.values[j] = 1.0 / r.nu[src] - s;
    out.vectors.col(j) = r.vectors.col(src);
  }
  return out;
}

double pencil_residual(const GalerkinSystem& sys, const Eigen::VectorXd& zeta, double lambda) {
  const Eigen::VectorXd kz =
      sys.stiffness_diagonal.cwiseProduct(zeta) + sys.potential * zeta;
  const Eigen::VectorXd bz = apply_mass(sys.mass, zeta);
  const double denom = std::max(kz.norm(), bz.norm());
  return denom == 0.0 ? 0.0 : (kz - lambda * bz).norm() / denom;
}

double rayleigh_quotient(const GalerkinSystem& sys, const Eigen::VectorXd& zeta) {
  const int n = sys.N;
  if (zeta.size() != n) throw InvalidInput("rayleigh_quotient: coefficient vector has wrong size");
  long double num = 0.0L, den = 0.0L;
  for (int j = 0; j < n; ++j) {
    long double col = 0.0L;
    for (int i = 0; i < n; ++i) col += static_cast<long double>(sys.potential(i, j)) * zeta[i];
    num += (col + static_cast<long double>(sys.stiffness_diagonal[j]) * zeta[j]) * zeta[j];
    long double b = static_cast<long double>(sys.mass(j, j)) * zeta[j];
    if (j + 1 < n) b += 2.0L * static_cast<long double>(sys.mass(j, j + 1)) * zeta[j + 1];
    if (j + 2 < n) b += 2.0L * static_cast<long double>(sys.mass(j, j + 2)) * zeta[j + 2];
    den += b * zeta[j];
  }
  if (!(den > 0.0L)) throw InvalidInput("rayleigh_quotient: zero coefficient vector");
  return static_cast<double>(num / den);
}

EigenPair normalize(EigenPair pair, const GalerkinSystem& sys, EndpointFlags flags) {
  if (pair.zeta.size() != sys.N) throw InvalidInput("normalize: coefficient vector has wrong size");
  const double norm2 = pair.zeta.dot(apply_mass(sys.mass, pair.zeta));
  if (!(norm2 > 0.0)) throw InvalidInput("normalize: zero coefficient vector");
  pair.zeta /= std::sqrt(norm2);
  const auto hat = hat_endpoint_values(pair, sys, flags);
  if (std::abs(hat.left) <= 1e-12) {
    throw NumericalFailure("normalize: zhat_N(-1) vanishes; spurious mode or wrong kappa flags");
  }
  if (hat.left < 0.0) pair.zeta = -pair.zeta;
  return pair;
}

std::vector<EigenPair> solve_pencil(const GalerkinSystem& sys, int k_max,
                                    const PencilOptions& options) {
  if (k_max < 1 || k_max > sys.N) {
    throw InvalidInput("solve_pencil: k_max must lie in [1, N]");
  }
  std::vector<EigenPair> pairs;

  if (options.split) {
    const auto split = symmetric_split(sys, options.potential_is_even);
    for (const GalerkinBlock* block : {&split.even, &split.odd}) {
      const int h = static_cast<int>(block->indices.size());
      const int count = std::min(k_max, h);
      Eigen::MatrixXd k = block->potential;
      k.diagonal() += block->stiffness_diagonal;
      const auto sol = smallest_generalized_eigenpairs(k, block->mass, count, options.shift);
      for (int j = 0; j < count; ++j) {
        EigenPair p;
        p.lambda = sol.values[j];
        p.zeta = Eigen::VectorXd::Zero(sys.N);
        for (int i = 0; i < h; ++i) p.zeta[block->indices[i]] = sol.vectors(i, j);
        pairs.push_back(std::move(p));
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
    pairs.resize(k_max);
  } else {
    Eigen::MatrixXd k = sys.potential;
    k.diagonal() += sys.stiffness_diagonal;
    const auto sol = smallest_generalized_eigenpairs(k, sys.mass.dense(), k_max, options.shift);
    for (int j = 0; j < k_max; ++j) {
      EigenPair p;
      p.lambda = sol.values[j];
      p.zeta = sol.vectors.col(j);
      pairs.push_back(std::move(p));
    }
  }

  for (int j = 0; j < k_max; ++j) {
    auto& p = pairs[j];
    p.index = j + 1;
    p = normalize(std::move(p), sys, sys.flags);
    p.lambda = rayleigh_quotient(sys, p.zeta);
    p.residual = pencil_residual(sys, p.zeta, p.lambda);
    if (!(p.residual <= kResidualTolerance)) {
      throw NumericalFailure("eigenpair " + std::to_string(p.index) + " residual " +
                             std::to_string(p.residual) + " exceeds tolerance");
    }
    if (j > 0 && !(p.lambda > pairs[j - 1].lambda)) {
      throw NumericalFailure("eigenvalues are not strictly increasing at index " +
                             std::to_string(p.index));
    }
  }
  return pairs;
}

}  // namespace slspec
