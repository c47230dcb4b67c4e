#include "susyqm/potentials.hpp"

#include <cmath>

#include "susyqm/errors.hpp"

namespace susyqm {

double isotonic_potential(double omega_cap, double eta, double x) {
  const double u = eta * x + 1.0;
  if (std::abs(u) <= 1e-14)
    throw SingularPointError("isotonic potential pole at x = -1/eta",
                             eta != 0.0 ? -1.0 / eta : 0.0);
  const double s = u - 1.0 / u;
  return omega_cap * s * s;
}

Domain urabe_domain(double zeta) {
  if (zeta == 0.0) throw ConfigError("urabe potential: zeta must be nonzero");
  const double lo = -1.0 / (2.0 * zeta);
  const double hi = 3.0 / (2.0 * zeta);
  return Domain::custom(std::min(lo, hi), std::max(lo, hi));
}

double urabe_potential(double zeta, double omega, double x) {
  const Domain box = urabe_domain(zeta);
  const double radicand = 1.0 + 2.0 * zeta * x;
  if (radicand < 0.0 || x < box.left || x > box.right)
    throw OutOfDomainError("urabe potential: x outside its box");
  const double d = 1.0 - std::sqrt(radicand);
  return omega * omega / (2.0 * zeta * zeta) * d * d;
}

}  // namespace susyqm
