#pragma once

#include <vector>

namespace fracbvp {

/// Gauss-Legendre rule mapped to (0,1). Nodes strictly interior and
/// increasing; weights sum to 1.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// order in [8, 1024]; deterministic for fixed order.
Quadrature build_quadrature(int order);

/// Raw Gauss-Legendre on (a,b), any order >= 1 (internal building block
/// for the panel-exact kernel integrals).
void gauss_legendre_panel(int n, double a, double b,
                          std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace fracbvp
