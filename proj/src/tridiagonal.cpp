#include "susyqm/tridiagonal.hpp"

#include <cmath>

namespace susyqm {

TridiagonalOperator discretize(const PotentialFn& v, const Grid& grid) {
  TridiagonalOperator op;
  op.grid = grid;
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  op.diagonal.resize(static_cast<std::size_t>(grid.n));
  op.off_diagonal.assign(static_cast<std::size_t>(grid.n > 0 ? grid.n - 1 : 0),
                         -inv_h2);
  for (int i = 0; i < grid.n; ++i) {
    const double vi = v(grid.node(i));
    if (!std::isfinite(vi))
      throw SingularPointError("potential not finite on a grid node",
                               grid.node(i));
    op.diagonal[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + vi;
  }
  return op;
}

std::vector<double> matvec(const TridiagonalOperator& op,
                          const std::vector<double>& x) {
  const std::size_t n = op.diagonal.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = op.diagonal[i] * x[i];
    if (i > 0) acc += op.off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) acc += op.off_diagonal[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

}  // namespace susyqm
