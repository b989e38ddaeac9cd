#pragma once

#include <string>
#include <vector>

#include "slspec/potential.hpp"

namespace slspec {

struct ProblemSpec {
  std::string name;
  std::vector<PotentialTerm> terms;
  BoundaryConditions bc;
  std::string notes;
  /// q(x) = q(-x); enables the parity split when the conditions allow it.
  bool even_potential = false;

  Problem problem() const { return {terms, bc}; }
};

/// Named boundary conditions: dirichlet, neumann, dirichlet-neumann
/// (y(-1) = y'(1) = 0), neumann-dirichlet (y'(-1) = y(1) = 0), robin
/// (y'(+-1) = y(+-1)) and robin-neumann (y(-1) - y'(-1) = y'(1) = 0).
BoundaryConditions named_conditions(const std::string& name);
std::vector<std::string> condition_names();

/// Named potentials: free, constant, q1, q2, q3-0.5, q3-0.75, q4-0.4,
/// q4-0.8 and intro (10 / (1 - x^2)^{3/4}).
struct NamedPotential {
  std::vector<PotentialTerm> terms;
  bool even = false;
  std::string notes;
};
NamedPotential named_potential(const std::string& name);
std::vector<std::string> potential_names();

ProblemSpec make_problem(const std::string& potential, const std::string& conditions);

/// The reference corpus: q1 and q2 under the four conditions of the order
/// tables, q3 (beta = 1/2, 3/4) with Neumann, q4 (beta = 2/5, 4/5) with
/// y(-1) - y'(-1) = y'(1) = 0, and the Neumann intro problem.
std::vector<ProblemSpec> builtin_suite();

}  // namespace slspec
