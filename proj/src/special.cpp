#include "slspec/special.hpp"

#include <cmath>
#include <limits>

#include "slspec/error.hpp"

namespace slspec {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

SignedLogGamma log_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    return {std::numeric_limits<double>::infinity(), 0};
  }
#if defined(__GLIBC__)
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  return {value, sign};
#else
  int sign = 1;
  if (x < 0.0 && static_cast<long long>(std::floor(x)) % 2 != 0) sign = -1;
  return {std::lgamma(x), sign};
#endif
}

double reciprocal_gamma(double x) {
  const auto lg = log_gamma(x);
  if (lg.sign == 0) return 0.0;
  return lg.sign * std::exp(-lg.log_abs);
}

double gamma_function(double x) {
  const auto lg = log_gamma(x);
  if (lg.sign == 0) throw InvalidInput("gamma_function: pole at non-positive integer");
  return lg.sign * std::exp(lg.log_abs);
}

double pochhammer(double t, int n) {
  double value = 1.0;
  for (int i = 0; i < n; ++i) value *= t + i;
  return value;
}

double difference_of_products(double a, double b, double c, double d) {
  const double cd = c * d;
  const double err = std::fma(-c, d, cd);
  const double dop = std::fma(a, b, -cd);
  return dop + err;
}

}  // namespace slspec
