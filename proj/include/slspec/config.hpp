#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "slspec/problems.hpp"

namespace slspec {

/// Problem files are JSON (comments allowed):
///
///   {
///     "name": "q1/neumann-dirichlet",
///     "bc": {"alpha_L": 0, "beta_L": 1, "alpha_R": 1, "beta_R": 0},
///     "terms": [
///       {"builtin": "exp", "params": [10, -1, 1], "beta": 0.75, "gamma": 0.25},
///       {"expr": "sin(5, 4, 4)", "beta": 0.875, "gamma": 0.75, "r": 0, "l": 1}
///     ]
///   }
///
/// Omitted multiplicities r, l are detected from g(+-1).
ProblemSpec problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemSpec& spec);

ProblemSpec load_problem(const std::filesystem::path& path);
void save_problem(const ProblemSpec& spec, const std::filesystem::path& path);

}  // namespace slspec
