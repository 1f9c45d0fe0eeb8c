#include "fracbvp/green_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbvp {

void GreenSpec::validate() const {
  if (k < 1 || k > 30)
    throw std::domain_error("GreenSpec: k must lie in [1, 30], got " + std::to_string(k));
  if (!(m >= 0.0 && m < static_cast<double>(k)))
    throw std::domain_error("GreenSpec: m must satisfy 0 <= m < k, got " + std::to_string(m));
  if (m > 0.0 && m == std::floor(m))
    throw std::domain_error("GreenSpec: m must not be a positive integer, got " +
                            std::to_string(m));
}

GreenKernel::GreenKernel(GreenSpec spec) : spec_(spec) {
  spec_.validate();
  const int k = spec_.k;
  const int n = 2 * k;
  // Pascal triangle in exact integer arithmetic; C(59,29) < 2^63.
  std::vector<std::vector<unsigned long long>> pas(n, std::vector<unsigned long long>(n, 0));
  for (int r = 0; r < n; ++r) {
    pas[r][0] = 1;
    for (int c = 1; c <= r; ++c)
      pas[r][c] = pas[r - 1][c - 1] + (c <= r - 1 ? pas[r - 1][c] : 0);
  }
  outer_binom_.resize(k);
  inner_binom_.resize(k);
  for (int i = 0; i < k; ++i) {
    outer_binom_[i] = static_cast<double>(pas[2 * k - 1][i]);
    inner_binom_[i].resize(k - i);
    for (int j = 0; j <= k - 1 - i; ++j)
      inner_binom_[i][j] = static_cast<double>(pas[k - 1 + j][j]);
  }
  for (int i = 2; i <= 2 * k - 1; ++i) inv_factorial_ /= static_cast<double>(i);
}

// G1(x,xi) = (1-xi)^k x^k sum_i (-1)^i C(2k-1,i) x^(k-i-1) xi^i
//                           sum_j C(k-1+j,j) xi^j
double GreenKernel::branch_sum(double x, double xi) const {
  const int k = spec_.k;
  double xpow[30], qpow[30];
  xpow[0] = 1.0;
  qpow[0] = 1.0;
  for (int p = 1; p < k; ++p) {
    xpow[p] = xpow[p - 1] * x;
    qpow[p] = qpow[p - 1] * xi;
  }
  double s = 0.0;
  for (int i = 0; i < k; ++i) {
    const auto& inner = inner_binom_[i];
    double horner = 0.0;
    for (int j = static_cast<int>(inner.size()) - 1; j >= 0; --j)
      horner = horner * xi + inner[j];
    double term = outer_binom_[i] * xpow[k - 1 - i] * qpow[i] * horner;
    s += (i & 1) ? -term : term;
  }
  return std::pow(1.0 - xi, k) * std::pow(x, k) * s;
}

double GreenKernel::green(double x, double xi) const {
  if (!(x >= 0.0 && x <= 1.0 && xi >= 0.0 && xi <= 1.0))
    throw std::domain_error("GreenKernel: arguments must lie in [0, 1]");
  double g = (x <= xi) ? branch_sum(x, xi) : branch_sum(xi, x);
  return -inv_factorial_ * g;
}

double GreenKernel::positive_green(double x, double xi) const {
  double g = green(x, xi);
  return (spec_.k & 1) ? -g : g;
}

double GreenKernel::kernel(double x, double xi) const {
  if (!(x >= 0.0 && x <= 1.0 && xi >= 0.0 && xi <= 1.0))
    throw std::domain_error("GreenKernel: arguments must lie in [0, 1]");
  if (x == 0.0 || x == 1.0 || xi == 0.0 || xi == 1.0) return 0.0;
  if (spec_.m == 0.0) return positive_green(x, xi);
  double w = std::pow(x, -0.5 * spec_.m) * std::pow(xi, -0.5 * spec_.m);
  return w * positive_green(x, xi);
}

double green_eval(const GreenSpec& spec, double x, double xi) {
  return GreenKernel(spec).green(x, xi);
}

double kernel_eval(const GreenSpec& spec, double x, double xi) {
  return GreenKernel(spec).kernel(x, xi);
}

}  // namespace fracbvp
