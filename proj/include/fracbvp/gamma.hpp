#pragma once

namespace fracbvp {

/// sin(pi*x) with exact zeros at integer x.
double sinpi(double x);

/// Gamma function via the Lanczos approximation (g=7, 9 terms), reflection
/// for x < 0.5. Relative error below 1e-13 away from the poles.
/// Throws std::domain_error at nonpositive integers.
double gamma_fn(double x);

/// 1/Gamma(x), entire; returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

}  // namespace fracbvp
