#include "slspec/tables.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "json.hpp"
#include "slspec/error.hpp"

namespace slspec {

namespace {

std::vector<ExpectedBlock> parse_tables() {
  const auto j = nlohmann::json::parse(expected_tables_source(), nullptr, true, true);
  std::vector<ExpectedBlock> out;
  for (const auto& t : j.at("tables")) {
    for (const auto& b : t.at("blocks")) {
      ExpectedBlock block{t.at("potential").get<std::string>(), b.at("bc").get<std::string>(), {}};
      for (const auto& r : b.at("rows")) {
        ExpectedEntry e{r.at("N").get<int>(), r.at("k").get<int>(), r.at("delta").get<double>(),
                        std::nullopt};
        if (!r.at("order").is_null()) e.order = r.at("order").get<double>();
        block.rows.push_back(e);
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

}  // namespace

const std::vector<ExpectedBlock>& expected_tables() {
  static const std::vector<ExpectedBlock> tables = parse_tables();
  return tables;
}

bool matches_significant_digits(double ours, double ref, int digits) {
  if (!std::isfinite(ours) || !std::isfinite(ref)) return false;
  if (ref == 0.0) return ours == 0.0;
  const double e = std::floor(std::log10(std::abs(ref)));
  return std::abs(ours - ref) <= 0.5 * std::pow(10.0, e - (digits - 1));
}

int BlockComparison::failures() const {
  int n = 0;
  for (const auto& e : entries) n += e.ok() ? 0 : 1;
  return n;
}

BlockComparison reproduce_block(const ExpectedBlock& block, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  std::set<int> Ns, ks;
  for (const auto& r : block.rows) {
    Ns.insert(r.N);
    ks.insert(r.k);
  }
  auto spec = make_problem(block.potential, block.bc);
  SweepOptions opt;
  opt.N_grid.assign(Ns.begin(), Ns.end());
  opt.k_set.assign(ks.begin(), ks.end());
  opt.Nt = 0;
  opt.correction = false;
  opt.richardson = false;
  opt.workers = workers;
  const auto sweep = run_sweep(spec, opt);

  BlockComparison cmp{block.potential, block.bc, {}, 0.0};
  for (const auto& r : block.rows) {
    EntryComparison e;
    e.expected = r;
    const auto& p = sweep.at(r.k, r.N);
    e.error = p.error;
    e.delta = p.delta_lambda;
    e.order = p.order_emp;
    e.delta_ok = matches_significant_digits(e.delta, r.delta);
    e.order_ok = r.order ? std::abs(e.order - *r.order) <= kOrderTolerance : std::isnan(e.order);
    cmp.entries.push_back(e);
  }
  cmp.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cmp;
}

std::vector<BlockComparison> reproduce_tables(const std::string& potential, int workers) {
  std::vector<BlockComparison> out;
  for (const auto& b : expected_tables()) {
    if (potential.empty() || b.potential == potential) out.push_back(reproduce_block(b, workers));
  }
  if (out.empty()) throw InvalidInput("no expected table for potential '" + potential + "'");
  return out;
}

}  // namespace slspec
