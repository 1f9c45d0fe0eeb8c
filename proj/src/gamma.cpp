#include "fracbvp/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbvp {

double sinpi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1], x - r is an even integer
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(M_PI * r);
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_positive(double x) {  // x >= 0.5
  x -= 1.0;
  double a = kLanczos[0];
  double t = x + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite argument");
  if (x == 1.0 || x == 2.0) return 1.0;  // keep the unit values exact
  if (x >= 0.5) return lanczos_positive(x);
  double s = sinpi(x);
  if (s == 0.0) throw std::domain_error("gamma_fn: pole at x = " + std::to_string(x));
  return M_PI / (s * lanczos_positive(1.0 - x));
}

double reciprocal_gamma(double x) {
  if (x == 1.0 || x == 2.0) return 1.0;
  if (x >= 0.5) return 1.0 / lanczos_positive(x);
  return sinpi(x) * lanczos_positive(1.0 - x) / M_PI;
}

}  // namespace fracbvp
