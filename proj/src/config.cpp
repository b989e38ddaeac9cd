#include "slspec/config.hpp"

#include <fstream>

#include "slspec/error.hpp"

namespace slspec {

using nlohmann::json;

ProblemSpec problem_from_json(const json& j) {
  try {
    ProblemSpec spec;
    spec.name = j.value("name", std::string("unnamed"));
    spec.notes = j.value("notes", std::string());
    spec.even_potential = j.value("even", false);

    const auto& bc = j.at("bc");
    spec.bc = {bc.at("alpha_L").get<double>(), bc.at("beta_L").get<double>(),
               bc.at("alpha_R").get<double>(), bc.at("beta_R").get<double>()};
    spec.bc.validate();

    for (const auto& t : j.value("terms", json::array())) {
      PotentialTerm term;
      if (t.contains("expr") && t.contains("builtin")) {
        throw InvalidInput("term may give either 'expr' or 'builtin', not both");
      }
      if (t.contains("expr")) {
        term.g = parse_factor(t.at("expr").get<std::string>());
      } else if (t.contains("builtin")) {
        term.g = make_factor(t.at("builtin").get<std::string>(),
                             t.value("params", std::vector<double>{}));
      } else {
        throw InvalidInput("term needs 'expr' or 'builtin'");
      }
      term.exponents = {t.value("beta", 0.0), t.value("gamma", 0.0)};
      term.right_zero_order =
          t.contains("r") ? t.at("r").get<int>() : detect_zero_order(term.g, 1.0);
      term.left_zero_order =
          t.contains("l") ? t.at("l").get<int>() : detect_zero_order(term.g, -1.0);
      term.validate();
      spec.terms.push_back(std::move(term));
    }
    return spec;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed problem description: ") + e.what());
  }
}

json problem_to_json(const ProblemSpec& spec) {
  json j;
  j["name"] = spec.name;
  if (!spec.notes.empty()) j["notes"] = spec.notes;
  if (spec.even_potential) j["even"] = true;
  j["bc"] = {{"alpha_L", spec.bc.alpha_left},
             {"beta_L", spec.bc.beta_left},
             {"alpha_R", spec.bc.alpha_right},
             {"beta_R", spec.bc.beta_right}};
  j["terms"] = json::array();
  for (const auto& t : spec.terms) {
    j["terms"].push_back({{"builtin", t.g.family},
                          {"params", t.g.params},
                          {"beta", t.exponents.beta},
                          {"gamma", t.exponents.gamma},
                          {"r", t.right_zero_order},
                          {"l", t.left_zero_order}});
  }
  return j;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open problem file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse " + path.string() + ": " + e.what());
  }
  return problem_from_json(j);
}

void save_problem(const ProblemSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << problem_to_json(spec).dump(2) << '\n';
}

}  // namespace slspec
