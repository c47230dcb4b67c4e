#include "susyqm/quasi.hpp"

#include <algorithm>
#include <cmath>

namespace susyqm {

double offdiagonal_residual(const QuasiElements& q, const Grid& grid) {
  auto block_size = [&](const BlockCoeff& b) {
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      const double x = grid.node(i);
      worst = std::max(worst, std::abs(b.c0_at(x)) + std::abs(b.c1_at(x)));
    }
    return worst;
  };
  return std::max(block_size(q.k12), block_size(q.k21));
}

}  // namespace susyqm
