#include "fracbvp/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracbvp {

namespace {

// Newton iteration on P_n from the Chebyshev initial guess; nodes to ~1e-15.
void gauss_legendre_unit(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 1.0, p1 = t, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = t;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[n - 1 - i] = 0.5 * (t + 1.0);
    w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);  // already scaled for unit interval
  }
}

}  // namespace

Quadrature build_quadrature(int order) {
  if (order < 8 || order > 1024)
    throw std::domain_error("build_quadrature: order must lie in [8, 1024], got " +
                            std::to_string(order));
  Quadrature q;
  q.order = order;
  gauss_legendre_unit(order, q.nodes, q.weights);
  return q;
}

void gauss_legendre_panel(int n, double a, double b,
                          std::vector<double>& nodes, std::vector<double>& weights) {
  gauss_legendre_unit(n, nodes, weights);
  double len = b - a;
  for (int i = 0; i < n; ++i) {
    nodes[i] = a + len * nodes[i];
    weights[i] *= len;
  }
}

}  // namespace fracbvp
