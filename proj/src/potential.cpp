#include "slspec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

#include "slspec/error.hpp"

namespace slspec {
namespace {

void require_arity(const std::string& family, const std::vector<double>& p, std::size_t n) {
  if (p.size() != n) {
    throw InvalidInput("factor '" + family + "' expects " + std::to_string(n) +
                       " parameters, got " + std::to_string(p.size()));
  }
}

// c * f(a x + b) for f in {exp, cos, sin, cosh, log}.
SmoothFactor affine(const std::string& family, const std::vector<double>& p,
                    double (*f)(double), double (*df)(double)) {
  require_arity(family, p, 3);
  const double c = p[0], a = p[1], b = p[2];
  return {family, p, [=](double x) { return c * f(a * x + b); },
          [=](double x) { return c * a * df(a * x + b); }};
}

double neg_sin(double x) { return -std::sin(x); }
double reciprocal(double x) { return 1.0 / x; }
double cosine(double x) { return std::cos(x); }
double sine(double x) { return std::sin(x); }
double exponential(double x) { return std::exp(x); }
double hyp_cos(double x) { return std::cosh(x); }
double hyp_sin(double x) { return std::sinh(x); }
double logarithm(double x) { return std::log(x); }

struct Registry {
  std::mutex mutex;
  std::map<std::string, FactorBuilder> builders;

  Registry() {
    builders["constant"] = [](const std::vector<double>& p) {
      require_arity("constant", p, 1);
      const double c = p[0];
      return SmoothFactor{"constant", p, [c](double) { return c; }, [](double) { return 0.0; }};
    };
    builders["polynomial"] = [](const std::vector<double>& p) {
      if (p.empty()) throw InvalidInput("factor 'polynomial' needs at least one coefficient");
      auto value = [p](double x) {
        double s = 0.0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
        return s;
      };
      auto slope = [p](double x) {
        double s = 0.0;
        for (std::size_t k = p.size() - 1; k >= 1; --k) s = s * x + k * p[k];
        return s;
      };
      return SmoothFactor{"polynomial", p, value, slope};
    };
    builders["exp"] = [](const std::vector<double>& p) {
      return affine("exp", p, exponential, exponential);
    };
    builders["cos"] = [](const std::vector<double>& p) { return affine("cos", p, cosine, neg_sin); };
    builders["sin"] = [](const std::vector<double>& p) { return affine("sin", p, sine, cosine); };
    builders["cosh"] = [](const std::vector<double>& p) {
      return affine("cosh", p, hyp_cos, hyp_sin);
    };
    builders["log"] = [](const std::vector<double>& p) {
      return affine("log", p, logarithm, reciprocal);
    };
    // c / (a - x^2)
    builders["reciprocal_quadratic"] = [](const std::vector<double>& p) {
      require_arity("reciprocal_quadratic", p, 2);
      const double c = p[0], a = p[1];
      if (a <= 1.0) throw InvalidInput("reciprocal_quadratic: pole inside [-1,1]");
      return SmoothFactor{"reciprocal_quadratic", p, [=](double x) { return c / (a - x * x); },
                          [=](double x) { return 2.0 * c * x / ((a - x * x) * (a - x * x)); }};
    };
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

SmoothFactor make_factor(const std::string& family, std::vector<double> params) {
  auto& r = registry();
  FactorBuilder builder;
  {
    std::lock_guard lock(r.mutex);
    const auto it = r.builders.find(family);
    if (it == r.builders.end()) throw InvalidInput("unknown factor family '" + family + "'");
    builder = it->second;
  }
  return builder(params);
}

SmoothFactor parse_factor(const std::string& expression) {
  const auto open = expression.find('(');
  const auto close = expression.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw InvalidInput("factor expression must look like family(p0, p1, ...): '" + expression +
                       "'");
  }
  if (!trim(expression.substr(close + 1)).empty()) {
    throw InvalidInput("trailing text after factor expression: '" + expression + "'");
  }
  const std::string family = trim(expression.substr(0, open));
  std::vector<double> params;
  std::stringstream body(expression.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    item = trim(item);
    if (item.empty()) throw InvalidInput("empty parameter in '" + expression + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidInput("bad number '" + item + "' in '" + expression + "'");
    params.push_back(v);
  }
  return make_factor(family, std::move(params));
}

std::string format_factor(const SmoothFactor& factor) {
  std::string out = factor.family + "(";
  char buf[64];
  for (std::size_t i = 0; i < factor.params.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", factor.params[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  return out + ")";
}

void register_factor_family(const std::string& family, FactorBuilder builder) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.builders[family] = std::move(builder);
}

std::vector<std::string> registered_factor_families() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [name, _] : r.builders) names.push_back(name);
  return names;
}

double sup_norm(const RealFunction& g) {
  double m = 0.0;
  constexpr int samples = 2001;
  for (int i = 0; i < samples; ++i) {
    const double x = -1.0 + 2.0 * i / (samples - 1);
    m = std::max(m, std::abs(g(x)));
  }
  return m;
}

int detect_zero_order(const SmoothFactor& g, double x0, double threshold) {
  const double scale = sup_norm(g.value);
  if (scale == 0.0) return 2;
  if (std::abs(g(x0)) > threshold * scale) return 0;
  if (std::abs(g.slope(x0)) > threshold * std::max(scale, sup_norm(g.slope))) return 1;
  return 2;
}

void PotentialTerm::validate() const {
  exponents.validate();
  if (!g.value) throw InvalidInput("potential term without a factor function");
  if (right_zero_order < 0 || left_zero_order < 0) {
    throw InvalidInput("zero multiplicities must be non-negative");
  }
  const double scale = sup_norm(g.value);
  constexpr double threshold = 1e-10;
  auto check = [&](int declared, double x0, const char* side) {
    const bool vanishes = std::abs(g(x0)) <= threshold * scale;
    if ((declared > 0) != vanishes) {
      throw InvalidInput(std::string("declared zero multiplicity at x = ") + side +
                         " disagrees with g(" + side + ") for " + format_factor(g));
    }
  };
  check(right_zero_order, 1.0, "+1");
  check(left_zero_order, -1.0, "-1");
}

bool PotentialTerm::is_constant() const {
  return g.family == "constant" && exponents.beta == 0.0 && exponents.gamma == 0.0;
}

double potential_value(const std::vector<PotentialTerm>& terms, double x) {
  double q = 0.0;
  for (const auto& t : terms) {
    q += t.g(x) / (std::pow(1.0 - x, t.exponents.beta) * std::pow(1.0 + x, t.exponents.gamma));
  }
  return q;
}

bool potential_is_bounded(const std::vector<PotentialTerm>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const PotentialTerm& t) {
    return t.exponents.beta <= 0.0 && t.exponents.gamma <= 0.0;
  });
}

}  // namespace slspec
