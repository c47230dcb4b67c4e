#pragma once

#include <complex>
#include <functional>

#include "susyqm/grid.hpp"

namespace susyqm {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(double)>;

// One block of a 2x2 operator matrix, as coefficient descriptors:
//   c2 * (-d^2/dx^2) + c1(x) * d/dx + c0(x).
// Off-diagonal blocks are first order (c2 = 0).
struct BlockCoeff {
  double c2 = 0.0;
  ComplexFn c1;  // nullptr means identically zero
  ComplexFn c0;

  Complex c1_at(double x) const { return c1 ? c1(x) : Complex{0.0, 0.0}; }
  Complex c0_at(double x) const { return c0 ? c0(x) : Complex{0.0, 0.0}; }
};

// The four blocks of a squared (quasi) Hamiltonian. Hermiticity of the
// assembled operator means block 21 is the formal adjoint of block 12:
//   c1_21 = -conj(c1_12),  c0_21 = conj(c0_12) - conj(c1_12)'.
struct QuasiElements {
  BlockCoeff k11, k12, k21, k22;
};

// Size of the off-diagonal blocks sampled on the grid:
// max over nodes of |c0| + |c1|, taken over both blocks (larger wins).
// Exactly zero iff both blocks vanish identically on the nodes.
double offdiagonal_residual(const QuasiElements& q, const Grid& grid);

}  // namespace susyqm
