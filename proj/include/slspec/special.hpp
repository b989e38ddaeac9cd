#pragma once

namespace slspec {

/// log|Gamma(x)| together with the sign of Gamma(x). At the poles
/// (x = 0, -1, -2, ...) sign is 0 and log_abs is +inf.
struct SignedLogGamma {
  double log_abs;
  int sign;
};

bool is_nonpositive_integer(double x);

SignedLogGamma log_gamma(double x);

/// 1/Gamma(x); exactly 0 at non-positive integers.
double reciprocal_gamma(double x);

/// Gamma(x); throws InvalidInput at a pole.
double gamma_function(double x);

/// Rising factorial (t)_n = Gamma(t + n) / Gamma(t), by direct product.
double pochhammer(double t, int n);

/// a*b - c*d with a single rounding error (Kahan's fma trick).
double difference_of_products(double a, double b, double c, double d);

}  // namespace slspec
