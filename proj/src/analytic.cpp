#include "susyqm/analytic.hpp"

#include <cmath>

#include "susyqm/errors.hpp"

namespace susyqm {

namespace {

double index_root(double c) {
  const double radicand = 0.25 + c;
  if (radicand < 0.0)
    throw ComplexIndexError(
        "quantization: 1/4 + c < 0, supercritical inverse-square coupling");
  return std::sqrt(radicand);
}

}  // namespace

double quantization_energy(const QuantizationInput& q, int n) {
  if (!(q.a > 0.0)) throw ConfigError("quantization: a must be positive");
  if (n < 0) throw ConfigError("quantization: n must be nonnegative");
  const double root = index_root(q.c);
  const double sign = q.branch == Branch::plus ? 1.0 : -1.0;
  return q.v0 + 4.0 * q.a * n + 2.0 * q.a * (1.0 + sign * root);
}

double quantization_constraint(const QuantizationInput& q, double energy) {
  const double root = index_root(q.c);
  const double sign = q.branch == Branch::plus ? 1.0 : -1.0;
  const double b = q.v0 - energy;
  return b / (4.0 * q.a) + 0.5 * (1.0 + sign * root);
}

double isochronous_energy_formula(int n, double beta, int q) {
  if (q != 1 && q != -1)
    throw ConfigError("isochronous energy: q must be +1 or -1");
  if (n < 0) throw ConfigError("isochronous energy: n must be nonnegative");
  const double radicand = 1.0 + 4.0 * (beta * beta + q * beta);
  // For q = +/-1 this equals (2 beta + q)^2 and cannot go negative; the
  // guard covers hypothetical extensions.
  if (radicand < 0.0)
    throw ComplexIndexError("isochronous energy: complex index");
  return 4.0 * n + 2.0 * (beta + 1.0) - q * (std::sqrt(radicand) - 1.0);
}

IsotonicMatch isotonic_match(double omega_cap, double eta, MatchSign sign) {
  if (!(omega_cap > 0.0) || eta == 0.0)
    throw DegenerateError(
        "isotonic match: needs Omega > 0 and eta != 0, otherwise the "
        "superpotential collapses to a constant");
  IsotonicMatch m;
  m.omega_cap = omega_cap;
  m.eta = eta;
  m.sign = sign;
  m.r = std::sqrt(omega_cap);
  const double disc = std::sqrt(eta * eta + 4.0 * omega_cap);
  const double pm = sign == MatchSign::upper ? 1.0 : -1.0;
  m.s = 0.5 * (-eta + pm * disc);
  m.lambda_shift = -2.0 * omega_cap - m.r * (2.0 * eta - pm * disc);
  m.physical = m.r > 0.0 && m.s > 0.0;
  return m;
}

double ho_energy(int n, double omega) {
  if (!(omega > 0.0)) throw ConfigError("ho_energy: omega must be positive");
  if (n < 0) throw ConfigError("ho_energy: n must be nonnegative");
  return omega * n;
}

}  // namespace susyqm
