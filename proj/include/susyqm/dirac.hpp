#pragma once

#include <Eigen/Dense>

#include "susyqm/grid.hpp"
#include "susyqm/partner.hpp"
#include "susyqm/quasi.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

// 1D Dirac Hamiltonian data: scalar potential S (added to the rest-mass
// energy on the diagonal), pseudoscalar potential W (the superpotential
// channel), and the quasi-Hamiltonian polynomial constants gamma, delta for
//   K = H^2 + 2 gamma H + (delta - m0c2^2) * 1.
// Units hbar = c = 1.
struct DiracParams {
  Superpotential scalar_s = Superpotential::constant(0.0);
  Superpotential pseudo_w = Superpotential::linear(1.0, 0.0);
  double rest_mass_energy = 1.0;  // m0 c^2 >= 0
  double gamma = 0.0;
  double delta = 0.0;

  double perfect_square_delta() const {
    return gamma * gamma + rest_mass_energy * rest_mass_energy;
  }
};

// Dense 2N x 2N complex matrix in block layout: indices [0, N) are the upper
// spinor component on the grid nodes, [N, 2N) the lower one.
struct BlockOperator {
  Eigen::MatrixXcd matrix;
  Grid grid;

  double hermiticity_defect() const;  // max_ij |M - M^dagger|
};

// Discretized Dirac matrix: diagonal blocks +/-(m0c2 + S(x_i)); off-diagonal
// blocks -i d/dx -/+ i W with a central first difference and Dirichlet ends.
BlockOperator build_dirac(const DiracParams& params, const Grid& grid);

// Coefficient descriptors of K = H^2 + 2 gamma H + (delta - m0c2^2) 1.
QuasiElements quasi_elements(const DiracParams& params);

// Same with delta pinned internally to gamma^2 + m0c2^2, which turns K into
// the square (H + gamma)^2; params.delta is ignored.
QuasiElements perfect_square_elements(const DiracParams& params);

struct DiagonalReduction {
  // pair.v_minus is the block-11 potential (carries +W'), pair.v_plus the
  // block-22 one; both are shifted by lambda_offset = e0. See partner.hpp
  // for the convention table.
  PartnerPair pair;
  double e0 = 0.0;  // (m0c2 + s0)^2
};

// Constant scalar field and gamma = 0: the quasi-Hamiltonian is diagonal
// with pure partner-potential blocks offset by e0.
DiagonalReduction diagonal_reduction(double s0, const Superpotential& w,
                                     double m0c2 = 1.0);

// Interior max-norm estimate of (K_assembled - [H^2 + 2 gamma H +
// (delta - m0c2^2)]) acting on smooth boundary-decaying probe spinors.
// K's second-derivative part is assembled as the square of the same central
// difference used in build_dirac, so constant-coefficient configurations
// cancel to machine precision and smooth ones decay at stencil order.
// Throws GridTooCoarseError for n < 16.
double quasi_matrix_residual(const DiracParams& params, const Grid& grid);

}  // namespace susyqm
