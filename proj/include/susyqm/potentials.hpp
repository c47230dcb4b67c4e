#pragma once

#include <functional>

#include "susyqm/superpotential.hpp"

namespace susyqm {

using PotentialFn = std::function<double(double)>;

// Omega * (eta*x + 1 - 1/(eta*x + 1))^2, pole at x = -1/eta.
double isotonic_potential(double omega_cap, double eta, double x);

// (omega^2 / (2 zeta^2)) * (1 - sqrt(1 + 2 zeta x))^2 on the finite box
// x in [-1/(2 zeta), 3/(2 zeta)].
double urabe_potential(double zeta, double omega, double x);

// The box on which the square root above is real and the potential is defined.
Domain urabe_domain(double zeta);

}  // namespace susyqm
