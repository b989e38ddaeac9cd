#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slspec/config.hpp"
#include "slspec/error.hpp"
#include "slspec/harness.hpp"
#include "slspec/moments.hpp"
#include "slspec/tables.hpp"

using namespace slspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct ProblemSource {
  std::string potential;
  std::string bc;
  std::string config;
  bool suite = false;
};

void add_problem_options(CLI::App* cmd, ProblemSource& src, bool allow_suite) {
  auto* p = cmd->add_option("--problem", src.potential, "built-in potential name");
  auto* c = cmd->add_option("--config", src.config, "problem description file (JSON)")
                ->check(CLI::ExistingFile);
  p->excludes(c);
  cmd->add_option("--bc", src.bc, "named boundary conditions (with --problem)");
  if (allow_suite) {
    cmd->add_flag("--suite", src.suite, "run every built-in problem")->excludes(p)->excludes(c);
  }
}

std::vector<ProblemSpec> resolve(const ProblemSource& src) {
  if (src.suite) return builtin_suite();
  if (!src.config.empty()) return {load_problem(src.config)};
  if (src.potential.empty()) throw InvalidInput("one of --problem or --config is required");
  if (src.bc.empty()) throw InvalidInput("--bc is required with --problem");
  return {make_problem(src.potential, src.bc)};
}

// "5,10,20" or ranges "1-25".
std::vector<int> parse_int_list(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const auto& item : items) {
    try {
      const auto dash = item.find('-', 1);
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
        if (b < a) throw InvalidInput("empty range '" + item + "'");
        for (int v = a; v <= b; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw InvalidInput("not an integer list entry: '" + item + "'");
    }
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_solve(const ProblemSource& src, int N, int k, bool no_correction, bool split,
              const std::string& format, const std::string& out_path) {
  if (N < 4) throw InvalidInput("--N must be at least 4");
  if (k < 1 || k > N) throw InvalidInput("--k must lie in [1, N]");
  const auto spec = resolve(src).front();
  const auto sol = solve_point(spec, N, k, {!no_correction, split});
  Output out(out_path);
  auto& os = out.stream();
  if (format == "json") {
    nlohmann::json j = {{"problem", spec.name}, {"N", N}};
    j["order_pred"] = std::isinf(sol.p_predicted) ? nlohmann::json("inf")
                                                  : nlohmann::json(sol.p_predicted);
    for (int i = 0; i < k; ++i) {
      j["eigenvalues"].push_back({{"k", i + 1},
                                  {"lambda", sol.lambda[i]},
                                  {"mu", std::isnan(sol.mu[i]) ? nlohmann::json(nullptr)
                                                               : nlohmann::json(sol.mu[i])},
                                  {"residual", sol.residual[i]}});
    }
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "problem,k,N,lambda,mu,residual\n";
    for (int i = 0; i < k; ++i) {
      os << spec.name << ',' << i + 1 << ',' << N << ',' << format_number(sol.lambda[i]) << ','
         << format_number(sol.mu[i]) << ',' << format_number(sol.residual[i]) << '\n';
    }
  } else {
    char line[160];
    os << spec.name << "  N = " << N << "  predicted order " << sol.p_predicted << '\n';
    std::snprintf(line, sizeof line, "%4s  %24s  %24s  %10s\n", "k", "lambda", "mu", "residual");
    os << line;
    for (int i = 0; i < k; ++i) {
      std::snprintf(line, sizeof line, "%4d  %24.16e  %24.16e  %10.2e\n", i + 1, sol.lambda[i],
                    sol.mu[i], sol.residual[i]);
      os << line;
    }
  }
  return kExitOk;
}

int run_sweep_command(const ProblemSource& src, const SweepOptions& opt,
                      const std::string& format, const std::string& out_path) {
  std::vector<SweepResult> results;
  for (const auto& spec : resolve(src)) results.push_back(run_sweep(spec, opt));
  Output out(out_path);
  if (format == "json") {
    out.stream() << summary_json(results).dump(2) << '\n';
  } else {
    write_csv(out.stream(), results);
  }
  int status = kExitOk;
  for (const auto& r : results) {
    for (const auto& f : r.failures) {
      std::cerr << r.problem << ": " << f << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int run_reproduce(const std::string& potential, int workers, const std::string& format,
                  const std::string& out_path) {
  const auto blocks = reproduce_tables(potential, workers);
  int failures = 0;
  double seconds = 0.0;
  nlohmann::json report = nlohmann::json::array();
  char line[200];
  for (const auto& b : blocks) {
    failures += b.failures();
    seconds += b.seconds;
    std::printf("%s / %s  (%.1f s)\n", b.potential.c_str(), b.bc.c_str(), b.seconds);
    std::printf("  %4s %3s  %12s %12s  %7s %7s\n", "N", "k", "delta", "expected", "order",
                "expected");
    for (const auto& e : b.entries) {
      const std::string expected_order =
          e.expected.order ? (std::snprintf(line, sizeof line, "%.3f", *e.expected.order), line)
                           : "--";
      std::snprintf(line, sizeof line, "  %4d %3d  %12.4e %12.4e  %7.3f %7s  %s%s\n",
                    e.expected.N, e.expected.k, e.delta, e.expected.delta, e.order,
                    expected_order.c_str(), e.ok() ? "ok" : "MISMATCH",
                    e.error.empty() ? "" : (" " + e.error).c_str());
      std::fputs(line, stdout);
      report.push_back({{"potential", b.potential},
                        {"bc", b.bc},
                        {"N", e.expected.N},
                        {"k", e.expected.k},
                        {"delta", e.delta},
                        {"delta_expected", e.expected.delta},
                        {"delta_ok", e.delta_ok},
                        {"order", std::isnan(e.order) ? nlohmann::json(nullptr)
                                                      : nlohmann::json(e.order)},
                        {"order_expected", e.expected.order ? nlohmann::json(*e.expected.order)
                                                            : nlohmann::json(nullptr)},
                        {"order_ok", e.order_ok}});
    }
  }
  std::printf("%d mismatches, %.1f s\n", failures, seconds);
  if (!out_path.empty() || format == "json") {
    Output out(out_path);
    out.stream() << report.dump(2) << '\n';
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

int run_validate_moments(double beta, double gamma, int M, double tolerance) {
  const auto v = validate_moments({beta, gamma}, M);
  std::printf("beta = %g, gamma = %g, m = 0..%d\n", beta, gamma, M);
  std::printf("  recurrence vs quadrature: %.3e (worst m = %d)\n", v.oracle_deviation,
              v.oracle_worst_index);
  std::printf("  recurrence vs general   : %.3e (worst m = %d)\n", v.general_deviation,
              v.general_worst_index);
  const bool ok = v.oracle_deviation <= tolerance && v.general_deviation <= tolerance;
  std::printf("%s (tolerance %.0e)\n", ok ? "PASS" : "FAIL", tolerance);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre-Galerkin eigensolver for weakly regular Sturm-Liouville problems"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (default: SLSPEC_WORKERS or all cores)");

  ProblemSource src;
  std::string format, out_path;

  auto* solve = app.add_subcommand("solve", "eigenvalues of one problem at one N");
  add_problem_options(solve, src, false);
  int N = 0, k = 0;
  bool no_correction = false, split = false;
  solve->add_option("--N", N, "truncation")->required();
  solve->add_option("--k", k, "number of eigenvalues")->required();
  solve->add_flag("--no-correction", no_correction);
  solve->add_flag("--split", split, "solve even and odd parts separately");
  solve->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  solve->add_option("--out", out_path);

  auto* sweep = app.add_subcommand("sweep", "N-sweep with orders, extrapolation and errors");
  add_problem_options(sweep, src, true);
  std::vector<std::string> N_items, k_items;
  SweepOptions opt;
  bool no_richardson = false;
  sweep->add_option("--N", N_items, "grid, e.g. 49,99,199 or 50-60")->delimiter(',')->required();
  sweep->add_option("--k", k_items, "indices, e.g. 5,10,20 or 1-25")->delimiter(',')->required();
  sweep->add_option("--Nt", opt.Nt, "reference truncation, 0 to skip")->capture_default_str();
  sweep->add_flag("--no-correction", no_correction);
  sweep->add_flag("--no-richardson", no_richardson);
  bool no_orders = false;
  sweep->add_flag("--no-orders", no_orders, "skip the 2N+1 solves");
  sweep->add_flag("--split", split);
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path);

  auto* reproduce = app.add_subcommand("reproduce-tables", "compare with the embedded tables");
  std::string table_potential;
  reproduce->add_option("--potential", table_potential, "q1 or q2 (default both)");
  reproduce->add_option("--format", format, "json also writes a report")
      ->check(CLI::IsMember({"text", "json"}));
  reproduce->add_option("--out", out_path, "JSON report path");

  auto* validate = app.add_subcommand("validate-moments", "moments against Gauss-Jacobi quadrature");
  double beta = 0.0, gamma = 0.0, tolerance = 1e-12;
  int M = 60;
  validate->add_option("--beta", beta)->required();
  validate->add_option("--gamma", gamma)->required();
  validate->add_option("--M", M, "largest index")->capture_default_str();
  validate->add_option("--tolerance", tolerance)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*solve) return run_solve(src, N, k, no_correction, split, format, out_path);
    if (*sweep) {
      opt.N_grid = parse_int_list(N_items);
      opt.k_set = parse_int_list(k_items);
      opt.correction = !no_correction;
      opt.richardson = !no_richardson;
      opt.orders = !no_orders;
      opt.split = split;
      opt.workers = workers;
      return run_sweep_command(src, opt, format, out_path);
    }
    if (*reproduce) return run_reproduce(table_potential, workers, format, out_path);
    if (*validate) return run_validate_moments(beta, gamma, M, tolerance);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
