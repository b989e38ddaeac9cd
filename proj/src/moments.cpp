#include "slspec/moments.hpp"

#include <cmath>
#include <string>

#include "slspec/error.hpp"
#include "slspec/quadrature.hpp"
#include "slspec/special.hpp"

namespace slspec {

void ExponentPair::validate() const {
  if (!(beta < 1.0) || !(gamma < 1.0)) {
    throw InvalidInput("exponents must satisfy beta < 1 and gamma < 1 (got beta = " +
                       std::to_string(beta) + ", gamma = " + std::to_string(gamma) + ")");
  }
}

double weight_mass(ExponentPair e) {
  e.validate();
  const double log_alpha = (1.0 - e.beta - e.gamma) * std::log(2.0) +
                           log_gamma(1.0 - e.beta).log_abs + log_gamma(1.0 - e.gamma).log_abs -
                           log_gamma(2.0 - e.beta - e.gamma).log_abs;
  return std::exp(log_alpha);
}

GeneratorSequences sequence_generators(ExponentPair e, int max_index) {
  e.validate();
  if (max_index < 0) throw InvalidInput("sequence_generators: negative length");
  const double b = e.beta;
  const double g = e.gamma;
  GeneratorSequences s;
  s.t.resize(max_index + 1);
  s.u.resize(2 * max_index + 1);
  s.nu.resize(max_index + 1);

  s.t[0] = reciprocal_gamma(1.0 - g);
  for (int r = 0; r < max_index; ++r) s.t[r + 1] = -s.t[r] * (g + r) / (r + 1.0);

  s.u[0] = reciprocal_gamma(2.0 - g);
  for (int r = 0; r < 2 * max_index; ++r) s.u[r + 1] = s.u[r] * (r + 1.0) / (r + 2.0 - g);

  const double gamma_1mg = gamma_function(1.0 - g);
  s.nu[0] = (1.0 - g) * gamma_1mg * gamma_1mg;
  for (int l = 0; l < max_index; ++l) {
    const double ratio = (l + 1.0 - g) / (l + 1.0);
    s.nu[l + 1] = s.nu[l] * (2.0 * l + 3.0 - g) / (2.0 * l + 1.0 - g) * ratio * ratio *
                  (b + l) / (2.0 - b - g + l);
  }
  return s;
}

std::vector<double> toeplitz_hankel_product(double alpha, std::span<const double> t,
                                            std::span<const double> u,
                                            std::span<const double> nu, int max_index) {
  if (max_index < 0) throw InvalidInput("toeplitz_hankel_product: negative length");
  const auto m1 = static_cast<std::size_t>(max_index) + 1;
  if (t.size() < m1 || nu.size() < m1 || u.size() < 2 * m1 - 1) {
    throw InvalidInput("toeplitz_hankel_product: sequence lengths do not match M = " +
                       std::to_string(max_index));
  }
  std::vector<double> q(m1);
  for (int m = 0; m <= max_index; ++m) {
    double sum = 0.0;
    for (int l = 0; l <= m; ++l) sum += t[m - l] * u[m + l] * nu[l];
    q[m] = alpha * sum;
  }
  return q;
}

MomentSequence moments_general(ExponentPair e, int max_index) {
  const auto s = sequence_generators(e, max_index);
  return {e, toeplitz_hankel_product(weight_mass(e), s.t, s.u, s.nu, max_index)};
}

MomentSequence moments(ExponentPair e, int max_index) {
  e.validate();
  if (max_index < 0) throw InvalidInput("moments: negative length");
  const double b = e.beta;
  const double g = e.gamma;
  MomentSequence out{e, std::vector<double>(max_index + 1, 0.0)};
  auto& q = out.values;

  if (b == 0.0 && g == 0.0) {
    q[0] = 2.0;
  } else if (b == 0.0) {
    q[0] = std::pow(2.0, 1.0 - g) / (1.0 - g);
    for (int m = 0; m < max_index; ++m) q[m + 1] = -q[m] * (g + m) / (m + 2.0 - g);
  } else if (g == 0.0) {
    q[0] = std::pow(2.0, 1.0 - b) / (1.0 - b);
    for (int m = 0; m < max_index; ++m) q[m + 1] = q[m] * (m + b) / (m + 2.0 - b);
  } else if (b == g) {
    // Whipple sum: odd moments vanish, even ones by a two-step ratio.
    q[0] = weight_mass(e);
    for (int m = 0; m + 2 <= max_index; m += 2) {
      q[m + 2] = q[m] * (m + 2.0 * g) * (m + 1.0) / ((m + 3.0 - 2.0 * g) * (m + 2.0));
    }
  } else {
    return moments_general(e, max_index);
  }
  return out;
}

double moment_oracle(ExponentPair e, int m) {
  e.validate();
  if (m < 0) throw InvalidInput("moment_oracle: negative degree");
  // Exact for degree m once 2n - 1 >= m; a few spare nodes cost nothing.
  const int nodes = m / 2 + 4;
  const auto rule = gauss_jacobi(nodes, -e.beta, -e.gamma);
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) sum += rule.weights[i] * legendre(m, rule.nodes[i]);
  return sum;
}

}  // namespace slspec

namespace slspec {

MomentValidation validate_moments(ExponentPair e, int max_index) {
  e.validate();
  const auto fast = moments(e, max_index);
  const auto general = moments_general(e, max_index);
  const double scale = 1.0 + std::abs(fast.values[0]);
  MomentValidation v{e, max_index, 0.0, 0, 0.0, 0};
  for (int m = 0; m <= max_index; ++m) {
    const double d_oracle = std::abs(fast.values[m] - moment_oracle(e, m)) / scale;
    const double d_general = std::abs(fast.values[m] - general.values[m]) / scale;
    if (d_oracle > v.oracle_deviation) {
      v.oracle_deviation = d_oracle;
      v.oracle_worst_index = m;
    }
    if (d_general > v.general_deviation) {
      v.general_deviation = d_general;
      v.general_worst_index = m;
    }
  }
  return v;
}

}  // namespace slspec
