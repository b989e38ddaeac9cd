#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "slspec/problems.hpp"

namespace slspec {

/// log2(|a - b| / |b - c|) for eigenvalues at N, 2N+1 and 4N+3. Empty when
/// the denominator vanishes (converged to round-off).
std::optional<double> empirical_order(double lk_N, double lk_2N1, double lk_4N3);

/// (2^p lam_N - lam_half) / (2^p - 1) with lam_half taken at (N-1)/2.
/// Infinite p returns lam_N. Throws InvalidInput for p <= 0 or NaN.
double richardson(double lam_N, double lam_half, double p);

/// Least-squares slope p of log(err) = c - p log(N+1). Empty with fewer
/// than two points.
std::optional<double> fit_order(std::span<const int> N, std::span<const double> err);

/// Worker cap: `requested` if positive, else SLSPEC_WORKERS, else the
/// hardware concurrency.
int worker_count(int requested = 0);

struct PointOptions {
  bool correction = true;
  /// Parity split; only applied at even N, odd N are solved in full.
  bool split = false;
};

/// Eigenvalues of one problem at one truncation.
struct PointSolution {
  int N = 0;
  std::vector<double> lambda;
  std::vector<double> mu;  // NaN where no correction applies
  std::vector<double> residual;
  double p_predicted = std::numeric_limits<double>::infinity();
};

PointSolution solve_point(const ProblemSpec& spec, int N, int k_max,
                          const PointOptions& options = {});

struct SweepOptions {
  std::vector<int> k_set;
  std::vector<int> N_grid;
  /// Truncation of the reference solve; 0 skips the reference.
  int Nt = 1601;
  bool correction = true;
  bool richardson = true;
  /// Solve at 2N+1 for delta_lambda and the empirical order.
  bool orders = true;
  bool split = false;
  int workers = 0;
};

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

struct SweepPoint {
  int k = 0;
  int N = 0;
  double lambda = kUndefined;
  double mu = kUndefined;
  double rho = kUndefined;
  double rel_err_lambda = kUndefined;
  double rel_err_mu = kUndefined;
  double delta_lambda = kUndefined;  // |lambda_N - lambda_{2N+1}|
  double order_emp = kUndefined;
  double order_pred = kUndefined;
  std::string error;
};

struct OrderFit {
  int k = 0;
  double p_lambda = kUndefined;
  double p_mu = kUndefined;
  int points_lambda = 0;
  int points_mu = 0;
};

struct SweepResult {
  std::string problem;
  std::vector<int> k_set;
  std::vector<int> N_grid;
  int Nt = 0;
  double p_predicted = kUndefined;
  std::vector<double> reference;  // lambda-bar per entry of k_set
  std::vector<SweepPoint> points;  // ordered by (k, N)
  std::vector<OrderFit> fits;
  std::vector<std::string> failures;

  const SweepPoint& at(int k, int N) const;
};

/// Solves at every grid N, at 2N+1 and (N-1)/2 where needed, and at Nt.
/// Solver failures are recorded per point; the sweep itself only throws
/// for invalid options.
SweepResult run_sweep(const ProblemSpec& spec, const SweepOptions& options);

/// Columns problem,k,N,lambda,mu,rho,rel_err_lambda,rel_err_mu,order_emp,
/// order_pred with 17 significant digits; undefined values are empty.
void write_csv(std::ostream& out, std::span<const SweepResult> results);

nlohmann::json summary_json(std::span<const SweepResult> results);

/// %.17g, or the empty string for NaN.
std::string format_number(double v);

}  // namespace slspec
