#include "slspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "slspec/assembly.hpp"
#include "slspec/correction.hpp"
#include "slspec/eigensolver.hpp"
#include "slspec/error.hpp"

namespace slspec {

std::optional<double> empirical_order(double lk_N, double lk_2N1, double lk_4N3) {
  const double num = std::abs(lk_N - lk_2N1);
  const double den = std::abs(lk_2N1 - lk_4N3);
  if (den == 0.0 || num == 0.0) return std::nullopt;
  return std::log2(num / den);
}

double richardson(double lam_N, double lam_half, double p) {
  if (std::isnan(p) || p <= 0.0) throw InvalidInput("richardson: order must be positive");
  if (std::isinf(p)) return lam_N;
  const double w = std::exp2(p);
  return (w * lam_N - lam_half) / (w - 1.0);
}

std::optional<double> fit_order(std::span<const int> N, std::span<const double> err) {
  if (N.size() != err.size()) throw InvalidInput("fit_order: size mismatch");
  const auto n = static_cast<double>(N.size());
  if (N.size() < 2) return std::nullopt;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < N.size(); ++i) {
    sx += std::log(N[i] + 1.0);
    sy += std::log(err[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < N.size(); ++i) {
    const double dx = std::log(N[i] + 1.0) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err[i]) - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return -sxy / sxx;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SLSPEC_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PointSolution solve_point(const ProblemSpec& spec, int N, int k_max, const PointOptions& options) {
  const auto sys = assemble(spec.problem(), N);
  PencilOptions po;
  po.split = options.split && N % 2 == 0;
  po.potential_is_even = spec.even_potential;
  const auto pairs = solve_pencil(sys, k_max, po);

  PointSolution out;
  out.N = N;
  out.p_predicted = predicted_order(spec.terms, sys.flags).p;
  const bool correct = options.correction && !potential_is_bounded(spec.terms);
  for (const auto& p : pairs) {
    out.lambda.push_back(p.lambda);
    out.residual.push_back(p.residual);
    out.mu.push_back(correct ? corrected_eigenvalue(p, sys, spec.terms).mu : kUndefined);
  }
  return out;
}

const SweepPoint& SweepResult::at(int k, int N) const {
  for (const auto& p : points) {
    if (p.k == k && p.N == N) return p;
  }
  throw InvalidInput("no sweep point for k=" + std::to_string(k) + ", N=" + std::to_string(N));
}

namespace {

struct Outcome {
  std::optional<PointSolution> solution;
  std::string error;
};

std::map<int, Outcome> solve_all(const ProblemSpec& spec, const std::set<int>& Ns, int k_max,
                                 const PointOptions& po, int workers) {
  const std::vector<int> jobs(Ns.rbegin(), Ns.rend());  // largest first
  std::vector<Outcome> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const int N = jobs[i];
      try {
        results[i].solution = solve_point(spec, N, std::min(k_max, N), po);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const int n = std::min<int>(worker_count(workers), static_cast<int>(jobs.size()));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(work);
  }
  std::map<int, Outcome> merged;
  for (std::size_t i = 0; i < jobs.size(); ++i) merged[jobs[i]] = std::move(results[i]);
  return merged;
}

double value_at(const std::map<int, Outcome>& sols, int N, int k, bool corrected) {
  const auto it = sols.find(N);
  if (it == sols.end() || !it->second.solution) return kUndefined;
  const auto& s = *it->second.solution;
  if (k > static_cast<int>(s.lambda.size())) return kUndefined;
  return corrected ? s.mu[k - 1] : s.lambda[k - 1];
}

}  // namespace

SweepResult run_sweep(const ProblemSpec& spec, const SweepOptions& options) {
  if (options.k_set.empty() || options.N_grid.empty()) {
    throw InvalidInput("run_sweep: empty k set or N grid");
  }
  if (!std::is_sorted(options.N_grid.begin(), options.N_grid.end()) ||
      std::adjacent_find(options.N_grid.begin(), options.N_grid.end()) != options.N_grid.end()) {
    throw InvalidInput("run_sweep: N grid must be strictly increasing");
  }
  if (options.N_grid.front() < 4) throw InvalidInput("run_sweep: N must be at least 4");
  for (int k : options.k_set) {
    if (k < 1) throw InvalidInput("run_sweep: k must be positive");
  }
  if (options.Nt != 0 && options.Nt < 2 * options.N_grid.back() + 1) {
    throw InvalidInput("run_sweep: Nt must be at least 2 max(N) + 1");
  }

  std::set<int> Ns(options.N_grid.begin(), options.N_grid.end());
  for (int N : options.N_grid) {
    if (options.orders) Ns.insert(2 * N + 1);
    if (options.richardson && N % 2 == 1 && (N - 1) / 2 >= 4) Ns.insert((N - 1) / 2);
  }
  if (options.Nt != 0) Ns.insert(options.Nt);
  const int k_max = *std::max_element(options.k_set.begin(), options.k_set.end());

  const PointOptions po{options.correction, options.split};
  const auto sols = solve_all(spec, Ns, k_max, po, options.workers);

  SweepResult r;
  r.problem = spec.name;
  r.k_set = options.k_set;
  r.N_grid = options.N_grid;
  r.Nt = options.Nt;
  for (const auto& [N, o] : sols) {
    if (!o.error.empty()) r.failures.push_back("N=" + std::to_string(N) + ": " + o.error);
    if (o.solution && std::isnan(r.p_predicted)) r.p_predicted = o.solution->p_predicted;
  }

  for (int k : options.k_set) {
    double ref = kUndefined;
    if (options.Nt != 0) {
      ref = value_at(sols, options.Nt, k, options.correction);
      if (std::isnan(ref)) ref = value_at(sols, options.Nt, k, false);
    }
    r.reference.push_back(ref);

    std::vector<int> fit_N_lambda, fit_N_mu;
    std::vector<double> fit_lambda, fit_mu;
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::abs(ref);

    for (int N : options.N_grid) {
      SweepPoint pt;
      pt.k = k;
      pt.N = N;
      pt.order_pred = r.p_predicted;
      const auto it = sols.find(N);
      if (!it->second.solution) {
        pt.error = it->second.error;
        r.points.push_back(pt);
        continue;
      }
      if (k > N) {
        pt.error = "k exceeds N";
        r.points.push_back(pt);
        continue;
      }
      pt.lambda = value_at(sols, N, k, false);
      pt.mu = value_at(sols, N, k, true);
      const double l2 = value_at(sols, 2 * N + 1, k, false);
      const double l4 = value_at(sols, 4 * N + 3, k, false);
      if (!std::isnan(l2)) pt.delta_lambda = std::abs(pt.lambda - l2);
      if (!std::isnan(l2) && !std::isnan(l4)) {
        pt.order_emp = empirical_order(pt.lambda, l2, l4).value_or(kUndefined);
      }
      if (options.richardson && N % 2 == 1) {
        const double half = value_at(sols, (N - 1) / 2, k, false);
        if (!std::isnan(half) && !std::isnan(r.p_predicted)) {
          pt.rho = richardson(pt.lambda, half, r.p_predicted);
        }
      }
      if (!std::isnan(ref) && ref != 0.0) {
        pt.rel_err_lambda = std::abs(pt.lambda - ref) / std::abs(ref);
        if (!std::isnan(pt.mu)) pt.rel_err_mu = std::abs(pt.mu - ref) / std::abs(ref);
        if (N >= 4 * k + 1) {
          const double el = std::abs(pt.lambda - ref), em = std::abs(pt.mu - ref);
          if (el > floor) {
            fit_N_lambda.push_back(N);
            fit_lambda.push_back(el);
          }
          if (em > floor) {
            fit_N_mu.push_back(N);
            fit_mu.push_back(em);
          }
        }
      }
      r.points.push_back(pt);
    }

    OrderFit f;
    f.k = k;
    f.p_lambda = fit_order(fit_N_lambda, fit_lambda).value_or(kUndefined);
    f.p_mu = fit_order(fit_N_mu, fit_mu).value_or(kUndefined);
    f.points_lambda = static_cast<int>(fit_lambda.size());
    f.points_mu = static_cast<int>(fit_mu.size());
    r.fits.push_back(f);
  }
  return r;
}

std::string format_number(double v) {
  if (std::isnan(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepResult> results) {
  out << "problem,k,N,lambda,mu,rho,rel_err_lambda,rel_err_mu,order_emp,order_pred\n";
  for (const auto& r : results) {
    for (const auto& p : r.points) {
      out << r.problem << ',' << p.k << ',' << p.N << ',' << format_number(p.lambda) << ','
          << format_number(p.mu) << ',' << format_number(p.rho) << ','
          << format_number(p.rel_err_lambda) << ',' << format_number(p.rel_err_mu) << ','
          << format_number(p.order_emp) << ',' << format_number(p.order_pred) << '\n';
    }
  }
}

namespace {

nlohmann::json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::json summary_json(std::span<const SweepResult> results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json e;
    e["problem"] = r.problem;
    e["k"] = r.k_set;
    e["N"] = r.N_grid;
    e["Nt"] = r.Nt;
    e["order_pred"] = number(r.p_predicted);
    e["reference"] = nlohmann::json::array();
    for (double v : r.reference) e["reference"].push_back(number(v));
    e["points"] = nlohmann::json::array();
    for (const auto& p : r.points) {
      nlohmann::json q = {{"k", p.k},
                          {"N", p.N},
                          {"lambda", number(p.lambda)},
                          {"mu", number(p.mu)},
                          {"rho", number(p.rho)},
                          {"rel_err_lambda", number(p.rel_err_lambda)},
                          {"rel_err_mu", number(p.rel_err_mu)},
                          {"delta_lambda", number(p.delta_lambda)},
                          {"order_emp", number(p.order_emp)}};
      if (!p.error.empty()) q["error"] = p.error;
      e["points"].push_back(std::move(q));
    }
    e["fits"] = nlohmann::json::array();
    for (const auto& f : r.fits) {
      e["fits"].push_back({{"k", f.k},
                           {"p_lambda", number(f.p_lambda)},
                           {"p_mu", number(f.p_mu)},
                           {"points_lambda", f.points_lambda},
                           {"points_mu", f.points_mu}});
    }
    e["failures"] = r.failures;
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace slspec
