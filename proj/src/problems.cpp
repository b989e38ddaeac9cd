#include "slspec/problems.hpp"

#include <map>

#include "slspec/error.hpp"

namespace slspec {
namespace {

PotentialTerm term(const std::string& family, std::vector<double> params, double beta,
                   double gamma, int r = 0, int l = 0) {
  return {make_factor(family, std::move(params)), {beta, gamma}, r, l};
}

const std::map<std::string, BoundaryConditions>& condition_table() {
  static const std::map<std::string, BoundaryConditions> table{
      {"dirichlet", {1.0, 0.0, 1.0, 0.0}},
      {"neumann", {0.0, 1.0, 0.0, 1.0}},
      {"dirichlet-neumann", {1.0, 0.0, 0.0, 1.0}},
      {"neumann-dirichlet", {0.0, 1.0, 1.0, 0.0}},
      {"robin", {-1.0, 1.0, -1.0, 1.0}},
      {"robin-neumann", {1.0, -1.0, 0.0, 1.0}},
  };
  return table;
}

NamedPotential q3(double beta) {
  return {{term("reciprocal_quadratic", {10.0, 2.0}, beta, beta)},
          true,
          "10 / ((2 - x^2) (1 - x^2)^beta)"};
}

// 5 [cosh(x) (1+x)^{1/5} + 2 log(3/2 + x) (1-x)^{1/5} + 4 (1 - x^2)] / (1-x^2)^beta,
// split into three terms by cancelling the powers of (1 +- x).
NamedPotential q4(double beta) {
  return {{term("cosh", {5.0, 1.0, 0.0}, beta, beta - 0.2),
           term("log", {10.0, 1.0, 1.5}, beta - 0.2, beta),
           term("constant", {20.0}, beta - 1.0, beta - 1.0)},
          false,
          "terms (beta, beta-1/5), (beta-1/5, beta), (beta-1, beta-1)"};
}

}  // namespace

BoundaryConditions named_conditions(const std::string& name) {
  const auto& t = condition_table();
  const auto it = t.find(name);
  if (it == t.end()) throw InvalidInput("unknown boundary conditions '" + name + "'");
  return it->second;
}

std::vector<std::string> condition_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : condition_table()) out.push_back(k);
  return out;
}

NamedPotential named_potential(const std::string& name) {
  if (name == "free") return {{}, true, "q = 0"};
  if (name == "q1") {
    return {{term("exp", {10.0, -1.0, 1.0}, 0.75, 0.25)},
            false,
            "10 exp(1 - x) / ((1 - x)^{3/4} (1 + x)^{1/4})"};
  }
  if (name == "q2") {
    return {{term("cos", {10.0, 4.0, 4.0}, 0.0, 0.5),
             term("sin", {5.0, 4.0, 4.0}, 0.875, 0.75, 0, 1)},
            false,
            "10 cos(4(1+x)) / (1+x)^{1/2} + 5 sin(4(1+x)) / ((1-x)^{7/8} (1+x)^{3/4})"};
  }
  if (name == "q3-0.5") return q3(0.5);
  if (name == "q3-0.75") return q3(0.75);
  if (name == "q4-0.4") return q4(0.4);
  if (name == "q4-0.8") return q4(0.8);
  if (name == "intro") {
    return {{term("constant", {10.0}, 0.75, 0.75)}, true, "10 / (1 - x^2)^{3/4}"};
  }
  throw InvalidInput("unknown potential '" + name + "'");
}

std::vector<std::string> potential_names() {
  return {"free", "q1", "q2", "q3-0.5", "q3-0.75", "q4-0.4", "q4-0.8", "intro"};
}

ProblemSpec make_problem(const std::string& potential, const std::string& conditions) {
  auto p = named_potential(potential);
  return {potential + "/" + conditions, std::move(p.terms), named_conditions(conditions),
          std::move(p.notes), p.even};
}

std::vector<ProblemSpec> builtin_suite() {
  std::vector<ProblemSpec> suite;
  for (const char* q : {"q1", "q2"}) {
    for (const char* bc : {"neumann-dirichlet", "dirichlet-neumann", "neumann", "robin"}) {
      suite.push_back(make_problem(q, bc));
    }
  }
  suite.push_back(make_problem("q3-0.5", "neumann"));
  suite.push_back(make_problem("q3-0.75", "neumann"));
  suite.push_back(make_problem("q4-0.4", "robin-neumann"));
  suite.push_back(make_problem("q4-0.8", "robin-neumann"));
  suite.push_back(make_problem("intro", "neumann"));
  return suite;
}

}  // namespace slspec
