#pragma once

#include <vector>

#include "susyqm/grid.hpp"
#include "susyqm/potentials.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

// Sign conventions used across the whole library (units hbar = c = 1, 2m = 1,
// kinetic term -d^2/dx^2):
//
//   v_plus  = W^2 - W' + Lambda   annihilated-side member; hosts the zero
//                                 mode exp(-Int W) when that is normalizable
//   v_minus = W^2 + W' + Lambda   its partner
//
// Everything that produces a pair in another label scheme is mapped here
// once and documented at the producer:
//   * diagonal_reduction: block-11 potential carries +W' and is v_minus + E0;
//     block 22 is v_plus + E0.
//   * reduce_planar: the spinor-up component obeys v_minus (its potential
//     carries +a_y'), the spinor-down component obeys v_plus.
struct PartnerPair {
  PotentialFn v_plus;
  PotentialFn v_minus;
  double lambda_offset = 0.0;
  Domain domain;
};

// V_pm = W^2 -/+ W' + Lambda. Domain: half line right of the pole for
// singular families, else the superpotential's natural domain.
PartnerPair partner_potentials(const Superpotential& w,
                               double lambda_offset = 0.0);

// V_pm = (2z -/+ 1) + x^2 + (z^2 +/- z)/x^2 on the half line x > 0.
// Identical to partner_potentials(linear_inverse{k=-t, l=1, z, t}).
PartnerPair isochronous_pair(double z);

struct GroundStateResult {
  std::vector<double> samples;       // strictly positive; unit discrete L2
                                     // norm when normalizable
  bool normalizable = false;
  double log_norm_integral = 0.0;    // log of Int exp(-2 Int W) over the grid
};

// Zero-mode candidate exp(-Int_a^x W) sampled by cumulative trapezoid.
// Normalizable iff the exponent climbs at least kTailLogMargin above its
// minimum toward BOTH grid ends (the grid is taken as the domain proxy,
// so it must be wide enough to expose the tails).
GroundStateResult ground_state(const Superpotential& w, const Grid& grid);

inline constexpr double kTailLogMargin = 2.302585092994046;  // ln 10

namespace detail {
// Cumulative trapezoid of f-samples on a uniform grid, I[0] = 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& f,
                                         double h);
// Tail test described at ground_state, applied to an exponent profile.
bool tails_confining(const std::vector<double>& exponent,
                     double margin = kTailLogMargin);
}  // namespace detail

}  // namespace susyqm
