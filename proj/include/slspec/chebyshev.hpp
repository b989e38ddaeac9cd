#pragma once

#include <functional>
#include <vector>

namespace slspec {

/// Truncated Chebyshev series sum_k c_k T_k(x) on [-1, 1].
struct ChebyshevApproximant {
  std::vector<double> coefficients;
  /// Sum of the magnitudes of the discarded trailing coefficients.
  double tail_bound = 0.0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double x) const;
  double derivative(double x) const;
};

struct ChebyshevFitOptions {
  double tolerance = 1e-15;
  int initial_degree = 8;
  int max_degree = 1 << 16;
};

/// Adaptive interpolation at Chebyshev extreme points with degree doubling.
/// Stops once every coefficient in the upper half of the spectrum is below
/// tolerance * (function scale), then trims the negligible tail. Throws
/// NumericalFailure if max_degree is reached first.
ChebyshevApproximant chebyshev_fit(const std::function<double(double)>& g,
                                   const ChebyshevFitOptions& options = {});

/// Chebyshev coefficients of the degree-n interpolant through g at the
/// points cos(pi j / n), j = 0..n.
std::vector<double> chebyshev_interpolant_coefficients(const std::function<double(double)>& g,
                                                       int n);

}  // namespace slspec
