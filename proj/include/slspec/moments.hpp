#pragma once

#include <span>
#include <vector>

namespace slspec {

/// Exponents of the weight (1-x)^{-beta} (1+x)^{-gamma}; both must be < 1.
struct ExponentPair {
  double beta = 0.0;
  double gamma = 0.0;

  void validate() const;
  bool operator==(const ExponentPair&) const = default;
};

/// values[m] = <P_m, 1>_(beta,gamma) = int P_m(x) (1-x)^{-beta} (1+x)^{-gamma} dx.
struct MomentSequence {
  ExponentPair exponents;
  std::vector<double> values;
};

/// Total mass of the weight: 2^{1-b-g} Gamma(1-b) Gamma(1-g) / Gamma(2-b-g).
double weight_mass(ExponentPair e);

/// Moments for m = 0..max_index, by recurrences (no quadrature). Dispatches
/// on the exponent case; the general case uses the Toeplitz-Hankel product.
MomentSequence moments(ExponentPair e, int max_index);

/// The Toeplitz-Hankel route regardless of the exponent case. Used to cross
/// check the specialized recurrences; requires gamma != 0 only through
/// Gamma(1-gamma), so every valid pair is accepted.
MomentSequence moments_general(ExponentPair e, int max_index);

/// Ratio-generated sequences t_r (r <= M), u_r (r <= 2M), nu_l (l <= M).
struct GeneratorSequences {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> nu;
};

GeneratorSequences sequence_generators(ExponentPair e, int max_index);

/// q_m = alpha * sum_{l=0}^{m} t_{m-l} u_{m+l} nu_l for m = 0..max_index,
/// evaluated directly in O(M^2).
std::vector<double> toeplitz_hankel_product(double alpha, std::span<const double> t,
                                            std::span<const double> u,
                                            std::span<const double> nu, int max_index);

/// Gauss-Jacobi quadrature of <P_m, 1>_(beta,gamma) with enough nodes to be
/// exact; independent of the recurrence path.
double moment_oracle(ExponentPair e, int m);

/// Agreement of the recurrence moments with the quadrature oracle and with
/// the general route, m = 0..max_index. Deviations are |a - b| / (1 + |q_0|).
struct MomentValidation {
  ExponentPair exponents;
  int max_index = 0;
  double oracle_deviation = 0.0;
  int oracle_worst_index = 0;
  double general_deviation = 0.0;
  int general_worst_index = 0;
};

MomentValidation validate_moments(ExponentPair e, int max_index);

}  // namespace slspec
