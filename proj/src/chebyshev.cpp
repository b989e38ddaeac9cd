#include "slspec/chebyshev.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "slspec/error.hpp"

namespace slspec {
namespace {

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

double max_abs(const std::vector<double>& v, std::size_t from = 0) {
  double m = 0.0;
  for (std::size_t i = from; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

double ChebyshevApproximant::operator()(double x) const {
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    const double b0 = coefficients[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coefficients.empty() ? 0.0 : coefficients[0] + x * b1 - b2;
}

double ChebyshevApproximant::derivative(double x) const {
  const int d = degree();
  if (d < 1) return 0.0;
  // Coefficients of the derivative series, c'_{k-1} = c'_{k+1} + 2k c_k.
  std::vector<double> dc(d + 1, 0.0);
  for (int k = d; k >= 1; --k) {
    dc[k - 1] = (k + 1 <= d ? dc[k + 1] : 0.0) + 2.0 * k * coefficients[k];
  }
  dc[0] *= 0.5;
  dc.pop_back();
  return ChebyshevApproximant{std::move(dc), 0.0}(x);
}

std::vector<double> chebyshev_interpolant_coefficients(const std::function<double(double)>& g,
                                                       int n) {
  if (n < 1) return {g(0.0)};
  std::vector<double> values(n + 1);
  for (int j = 0; j <= n; ++j) {
    values[j] = g(std::cos(std::numbers::pi * j / n));
  }
  std::vector<double> out(n + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_r2r_1d(n + 1, values.data(), out.data(), FFTW_REDFT00, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  for (auto& c : out) c /= n;
  out.front() *= 0.5;
  out.back() *= 0.5;
  return out;
}

ChebyshevApproximant chebyshev_fit(const std::function<double(double)>& g,
                                   const ChebyshevFitOptions& options) {
  for (int n = std::max(options.initial_degree, 2); n <= options.max_degree; n *= 2) {
    auto c = chebyshev_interpolant_coefficients(g, n);
    const double scale = max_abs(c);
    if (scale == 0.0) return {{0.0}, 0.0};
    if (max_abs(c, c.size() / 2) > options.tolerance * scale) continue;

    ChebyshevApproximant fit;
    std::size_t keep = c.size();
    while (keep > 1 && std::abs(c[keep - 1]) <= options.tolerance * scale) {
      fit.tail_bound += std::abs(c[keep - 1]);
      --keep;
    }
    c.resize(keep);
    fit.coefficients = std::move(c);
    return fit;
  }
  throw NumericalFailure("chebyshev_fit: no convergence up to degree " +
                         std::to_string(options.max_degree) + "; input is not analytic on [-1,1]");
}

}  // namespace slspec
