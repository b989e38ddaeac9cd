#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slspec/basis.hpp"
#include "slspec/moments.hpp"

namespace slspec {

using RealFunction = std::function<double(double)>;

/// A named closed form for the smooth factor g of a potential term.
/// `family` selects a registered formula and `params` its constants; the
/// pair is what configuration files store.
struct SmoothFactor {
  std::string family;
  std::vector<double> params;
  RealFunction value;
  RealFunction slope;

  double operator()(double x) const { return value(x); }
};

/// Builds a factor from a registered family, e.g. ("exp", {10, -1, 1}) is
/// 10 exp(1 - x). Throws InvalidInput for unknown families or bad arity.
SmoothFactor make_factor(const std::string& family, std::vector<double> params);

/// Parses the compact form "family(p0, p1, ...)".
SmoothFactor parse_factor(const std::string& expression);

/// Inverse of parse_factor, 17 significant digits per parameter.
std::string format_factor(const SmoothFactor& factor);

using FactorBuilder = std::function<SmoothFactor(const std::vector<double>&)>;

/// Adds a family to the registry so configurations can refer to it.
void register_factor_family(const std::string& family, FactorBuilder builder);

std::vector<std::string> registered_factor_families();

/// One summand g(x) / ((1-x)^beta (1+x)^gamma) of the potential. The
/// multiplicities of x = +1 (right_zero_order) and x = -1
/// (left_zero_order) as zeros of g are part of the problem definition.
struct PotentialTerm {
  SmoothFactor g;
  ExponentPair exponents;
  int right_zero_order = 0;
  int left_zero_order = 0;

  /// Checks exponents and that declared multiplicities agree with g(+-1).
  void validate() const;
  /// True when the term is a constant with zero exponents.
  bool is_constant() const;
};

/// Detects the multiplicity (0 or 1; 2 means "at least two") of x0 as a
/// zero of the factor, relative to threshold * max|g| on [-1, 1].
int detect_zero_order(const SmoothFactor& g, double x0, double threshold = 1e-10);

/// max |g| sampled on a fine grid.
double sup_norm(const RealFunction& g);

struct Problem {
  std::vector<PotentialTerm> terms;
  BoundaryConditions bc;
};

/// q(x) summed over all terms; for tests and diagnostics.
double potential_value(const std::vector<PotentialTerm>& terms, double x);

/// True if every term is unbounded nowhere (all exponents <= 0).
bool potential_is_bounded(const std::vector<PotentialTerm>& terms);

}  // namespace slspec
