#pragma once

#include <vector>

#include "susyqm/grid.hpp"
#include "susyqm/potentials.hpp"

namespace susyqm {

// Symmetric tridiagonal matrix of -d^2/dx^2 + V on a Dirichlet grid:
// diagonal 2/h^2 + V(x_i), off-diagonal entries all -1/h^2.
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // n-1 entries, all equal for this stencil
  Grid grid;
};

// 3-point stencil; throws SingularPointError if V is not finite on a node.
TridiagonalOperator discretize(const PotentialFn& v, const Grid& grid);

// y = T x with zero Dirichlet ghosts.
std::vector<double> matvec(const TridiagonalOperator& op,
                          const std::vector<double>& x);

}  // namespace susyqm
