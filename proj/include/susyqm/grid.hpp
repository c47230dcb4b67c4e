#pragma once

#include <vector>

#include "susyqm/errors.hpp"

namespace susyqm {

// Uniform interior-node grid for Dirichlet problems on [a, b].
// Spacing h = (b - a)/(n + 1); the n nodes are a + (i+1)h, i = 0..n-1,
// so both endpoints are boundary points carrying the (zero) Dirichlet data.
struct Grid {
  double a = -12.0;
  double b = 12.0;
  int n = 3000;
  // Distance from a singular endpoint when the grid was built with a guard;
  // 0 for plain grids. Informational, set by the guarded solvers.
  double epsilon_guard = 0.0;

  Grid() = default;
  Grid(double a_, double b_, int n_, double guard = 0.0)
      : a(a_), b(b_), n(n_), epsilon_guard(guard) {
    if (!(b > a)) throw ConfigError("grid: b must exceed a");
    if (n < 1) throw ConfigError("grid: need at least one interior node");
  }

  double h() const { return (b - a) / (n + 1); }
  double node(int i) const { return a + (i + 1) * h(); }

  std::vector<double> nodes() const {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = node(i);
    return xs;
  }
};

}  // namespace susyqm
