#pragma once

#include <limits>
#include <span>
#include <vector>

#include "slspec/assembly.hpp"
#include "slspec/basis.hpp"
#include "slspec/potential.hpp"

namespace slspec {

struct EigenPair;

/// zhat_N(-1) and zhat_N(+1): endpoint values of the eigenfunction with the
/// Dirichlet factors (1-x)^kappa_+ (1+x)^kappa_- divided out.
struct HatEndpointValues {
  double left = 0.0;
  double right = 0.0;
};

HatEndpointValues hat_endpoint_values(const EigenPair& pair, const GalerkinSystem& sys,
                                      EndpointFlags flags);

/// Same, from raw endpoint values of z_N.
HatEndpointValues hat_endpoint_values(const EndpointValues& z, EndpointFlags flags);

/// Convergence order p(delta) = 6 - 4 delta.
inline double order_exponent(double delta) { return 6.0 - 4.0 * delta; }

/// omega-hat(d0, d1) = 2^{1-d0-d1} Gamma(1-d0) / Gamma(d0); exactly 0 when
/// -d0 is a non-negative integer.
double omega_hat(double d0, double d1);

/// omega(+-1, d0, d1) = 2 (2 - d0 - kappa) omega_hat(d0, d1).
double omega(int kappa, double d0, double d1);

struct OrderPrediction {
  double p = std::numeric_limits<double>::infinity();
  double p_left = std::numeric_limits<double>::infinity();
  double p_right = std::numeric_limits<double>::infinity();
  std::vector<int> left_set;   // terms with -gamma_i not in N_0
  std::vector<int> right_set;  // terms with -beta_i not in N_0
};

OrderPrediction predicted_order(std::span<const PotentialTerm> terms, EndpointFlags flags);

/// Per-term endpoint data entering the correction.
struct TermEndpointData {
  double hat_beta = 0.0;   // beta - r - kappa_+
  double hat_gamma = 0.0;  // gamma - l - kappa_-
  double ghat_left = 0.0;
  double ghat_right = 0.0;
  double sigma_left = 0.0;
  double sigma_right = 0.0;
};

struct EndpointData {
  EndpointFlags kappa;
  std::vector<TermEndpointData> terms;
};

EndpointData endpoint_data(std::span<const PotentialTerm> terms, EndpointFlags flags);

/// Correction term Delta-hat_{ij} at truncation N.
double delta_hat(int i, int j, int N, const EndpointData& data, const HatEndpointValues& zhat);

struct CorrectionReport {
  double lambda = 0.0;
  double mu = 0.0;
  std::vector<std::vector<double>> delta_terms;
  double p_predicted = std::numeric_limits<double>::infinity();
  HatEndpointValues zhat;
};

/// mu = lambda - sum_{i,j} Delta-hat_{ij}. Throws InvalidInput when the
/// potential is bounded at both endpoints.
CorrectionReport corrected_eigenvalue(const EigenPair& pair, const GalerkinSystem& sys,
                                      std::span<const PotentialTerm> terms);

}  // namespace slspec
