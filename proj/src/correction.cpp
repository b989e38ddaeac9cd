#include "slspec/correction.hpp"

#include <cmath>

#include "slspec/eigensolver.hpp"
#include "slspec/error.hpp"
#include "slspec/special.hpp"

namespace slspec {

HatEndpointValues hat_endpoint_values(const EndpointValues& z, EndpointFlags flags) {
  const double left_div = flags.kappa_plus ? 2.0 : 1.0;
  const double right_div = flags.kappa_minus ? 2.0 : 1.0;
  HatEndpointValues h;
  h.left = (flags.kappa_minus ? z.slope_left : z.left) / left_div;
  h.right = (flags.kappa_plus ? -z.slope_right : z.right) / right_div;
  return h;
}

HatEndpointValues hat_endpoint_values(const EigenPair& pair, const GalerkinSystem& sys,
                                      EndpointFlags flags) {
  std::span<const double> zeta(pair.zeta.data(), static_cast<std::size_t>(pair.zeta.size()));
  return hat_endpoint_values(expansion_endpoint_values(sys.basis, zeta), flags);
}

double omega_hat(double d0, double d1) {
  const double rg = reciprocal_gamma(d0);
  if (rg == 0.0) return 0.0;
  return std::pow(2.0, 1.0 - d0 - d1) * gamma_function(1.0 - d0) * rg;
}

double omega(int kappa, double d0, double d1) {
  return 2.0 * (2.0 - d0 - kappa) * omega_hat(d0, d1);
}

OrderPrediction predicted_order(std::span<const PotentialTerm> terms, EndpointFlags flags) {
  OrderPrediction out;
  for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
    const auto& t = terms[i];
    if (!is_nonpositive_integer(-t.exponents.gamma)) {
      out.left_set.push_back(i);
      const double hat_gamma = t.exponents.gamma - t.left_zero_order - flags.kappa_minus;
      out.p_left = std::min(out.p_left, order_exponent(hat_gamma));
    }
    if (!is_nonpositive_integer(-t.exponents.beta)) {
      out.right_set.push_back(i);
      const double hat_beta = t.exponents.beta - t.right_zero_order - flags.kappa_plus;
      out.p_right = std::min(out.p_right, order_exponent(hat_beta));
    }
  }
  out.p = std::min(out.p_left, out.p_right);
  return out;
}

EndpointData endpoint_data(std::span<const PotentialTerm> terms, EndpointFlags flags) {
  EndpointData data;
  data.kappa = flags;
  for (const auto& t : terms) {
    TermEndpointData d;
    const int r = t.right_zero_order;
    const int l = t.left_zero_order;
    d.hat_beta = t.exponents.beta - r - flags.kappa_plus;
    d.hat_gamma = t.exponents.gamma - l - flags.kappa_minus;

    // g = (1-x)^r (1+x)^l ghat; only multiplicities 0 and 1 are corrected.
    if (l <= 1) d.ghat_left = (l == 0 ? t.g(-1.0) : t.g.slope(-1.0)) / std::pow(2.0, r);
    if (r <= 1) d.ghat_right = (r == 0 ? t.g(1.0) : -t.g.slope(1.0)) / std::pow(2.0, l);
    if (l <= 1 && !is_nonpositive_integer(-t.exponents.gamma)) {
      d.sigma_left = d.ghat_left * omega(flags.kappa_minus, d.hat_gamma, d.hat_beta);
    }
    if (r <= 1 && !is_nonpositive_integer(-t.exponents.beta)) {
      d.sigma_right = d.ghat_right * omega(flags.kappa_plus, d.hat_beta, d.hat_gamma);
    }
    data.terms.push_back(d);
  }
  return data;
}

double delta_hat(int i, int j, int N, const EndpointData& data, const HatEndpointValues& zhat) {
  if (N < 1) throw InvalidInput("delta_hat: N must be positive");
  const auto& a = data.terms.at(i);
  const auto& b = data.terms.at(j);
  const double np1 = N + 1.0;
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  double sum = 0.0;

  if (a.sigma_left != 0.0 && b.sigma_left != 0.0) {
    const double pp = order_exponent(a.hat_gamma) + order_exponent(b.hat_gamma);
    sum += 2.0 * a.sigma_left * b.sigma_left * zhat.left * zhat.left /
           (pp * std::pow(np1, 0.5 * pp));
  }
  if (a.sigma_right != 0.0 && b.sigma_right != 0.0) {
    const double pp = order_exponent(a.hat_beta) + order_exponent(b.hat_beta);
    sum += 2.0 * a.sigma_right * b.sigma_right * zhat.right * zhat.right /
           (pp * std::pow(np1, 0.5 * pp));
  }
  if (a.sigma_left != 0.0 && b.sigma_right != 0.0) {
    const double pp = order_exponent(a.hat_gamma) + order_exponent(b.hat_beta);
    sum += sign * a.sigma_left * b.sigma_right * zhat.left * zhat.right /
           (2.0 * std::pow(np1, 1.0 + 0.5 * pp));
  }
  if (a.sigma_right != 0.0 && b.sigma_left != 0.0) {
    const double pp = order_exponent(a.hat_beta) + order_exponent(b.hat_gamma);
    sum += sign * a.sigma_right * b.sigma_left * zhat.right * zhat.left /
           (2.0 * std::pow(np1, 1.0 + 0.5 * pp));
  }
  return sum;
}

CorrectionReport corrected_eigenvalue(const EigenPair& pair, const GalerkinSystem& sys,
                                      std::span<const PotentialTerm> terms) {
  if (terms.empty() || potential_is_bounded({terms.begin(), terms.end()})) {
    throw InvalidInput("corrected_eigenvalue: potential is bounded, no correction defined");
  }
  CorrectionReport report;
  report.lambda = pair.lambda;
  report.zhat = hat_endpoint_values(pair, sys, sys.flags);
  report.p_predicted = predicted_order(terms, sys.flags).p;
  const auto data = endpoint_data(terms, sys.flags);
  const int s = static_cast<int>(terms.size());
  report.delta_terms.assign(s, std::vector<double>(s, 0.0));
  double total = 0.0;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      report.delta_terms[i][j] = delta_hat(i, j, sys.N, data, report.zhat);
      total += report.delta_terms[i][j];
    }
  }
  report.mu = pair.lambda - total;
  return report;
}

}  // namespace slspec
