#include "susyqm/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "susyqm/errors.hpp"

namespace susyqm {

namespace {

constexpr Complex kI{0.0, 1.0};

Superpotential field_as_superpotential(const VectorPotential::Variant& v) {
  if (const auto* lin = std::get_if<LinearField>(&v))
    return Superpotential::linear(lin->lambda, lin->mu);
  if (const auto* iso = std::get_if<IsochronousField>(&v))
    return Superpotential::linear_inverse(0.0, iso->p, iso->q, iso->r);
  if (const auto* it = std::get_if<IsotonicField>(&v))
    return Superpotential::isotonic_shifted(it->r, it->s, it->eta, it->upsilon);
  const auto& tab = std::get<TabulatedField>(v);
  return Superpotential::tabulated(tab.xs, tab.as);
}

void check_positivity(const VectorPotential::Variant& v) {
  if (const auto* lin = std::get_if<LinearField>(&v)) {
    if (!(lin->lambda > 0.0) || lin->mu < 0.0)
      throw ConfigError("linear field: lambda must be > 0 and mu >= 0 "
                        "(set the override flag to relax)");
  } else if (const auto* iso = std::get_if<IsochronousField>(&v)) {
    if (!(iso->p > 0.0) || !(iso->q > 0.0) || iso->r < 0.0)
      throw ConfigError("isochronous field: p, q must be > 0 and r >= 0 "
                        "(set the override flag to relax)");
  } else if (const auto* it = std::get_if<IsotonicField>(&v)) {
    if (!(it->r > 0.0) || !(it->s > 0.0))
      throw ConfigError("isotonic field: r, s must be > 0 "
                        "(set the override flag to relax)");
  }
}

}  // namespace

VectorPotential::VectorPotential(Variant v, bool override_positivity)
    : v_(std::move(v)),
      override_(override_positivity),
      w_(field_as_superpotential(v_)) {
  if (!override_) check_positivity(v_);
}

Superpotential VectorPotential::to_superpotential(double wavenumber_k) const {
  if (const auto* lin = std::get_if<LinearField>(&v_))
    return Superpotential::linear(lin->lambda, wavenumber_k + lin->mu);
  if (const auto* iso = std::get_if<IsochronousField>(&v_))
    return Superpotential::linear_inverse(wavenumber_k, iso->p, iso->q, iso->r);
  if (const auto* it = std::get_if<IsotonicField>(&v_))
    return Superpotential::isotonic_shifted(it->r, it->s, it->eta,
                                            wavenumber_k + it->upsilon);
  const auto& tab = std::get<TabulatedField>(v_);
  std::vector<double> shifted = tab.as;
  for (double& a : shifted) a += wavenumber_k;
  return Superpotential::tabulated(tab.xs, std::move(shifted));
}

std::string VectorPotential::family_name() const {
  if (std::holds_alternative<LinearField>(v_)) return "linear";
  if (std::holds_alternative<IsochronousField>(v_)) return "isochronous";
  if (std::holds_alternative<IsotonicField>(v_)) return "isotonic";
  return "tabulated";
}

QuasiElements planar_quasi_elements(const PlanarConfig& cfg) {
  if (!(cfg.fermi_velocity > 0.0))
    throw ConfigError("planar: fermi velocity must be positive");
  const Superpotential w = cfg.vector_potential.to_superpotential(cfg.wavenumber_k);
  const double vf2 = cfg.fermi_velocity * cfg.fermi_velocity;
  const double s0 = cfg.s0;
  const double gamma = cfg.gamma;
  const double delta = cfg.delta;

  QuasiElements q;
  q.k11.c2 = vf2;
  q.k11.c0 = [w, vf2, s0, gamma, delta](double x) -> Complex {
    const auto e = w.eval(x);
    return vf2 * (e.value * e.value + e.derivative) + s0 * s0 +
           2.0 * gamma * s0 + delta;
  };
  q.k22.c2 = vf2;
  q.k22.c0 = [w, vf2, s0, gamma, delta](double x) -> Complex {
    const auto e = w.eval(x);
    return vf2 * (e.value * e.value - e.derivative) + s0 * s0 -
           2.0 * gamma * s0 + delta;
  };
  // The scalar term is constant here, so only the gamma part survives in the
  // off-diagonal blocks.
  if (gamma != 0.0) {
    const double vf = cfg.fermi_velocity;
    q.k12.c1 = [vf, gamma](double) { return -2.0 * kI * vf * gamma; };
    q.k12.c0 = [w, vf, gamma](double x) {
      return -2.0 * kI * vf * gamma * w.value(x);
    };
    q.k21.c1 = [vf, gamma](double) { return -2.0 * kI * vf * gamma; };
    q.k21.c0 = [w, vf, gamma](double x) {
      return 2.0 * kI * vf * gamma * w.value(x);
    };
  }
  return q;
}

ReducedPlanar reduce_planar(const VectorPotential& a, double wavenumber_k) {
  ReducedPlanar red;
  red.w_eff = a.to_superpotential(wavenumber_k);
  red.pair = partner_potentials(red.w_eff, 0.0);

  // Probe the effective superpotential over its natural domain to decide
  // which spinor component hosts the zero mode, and whether the potentials
  // confine at all.
  const Domain dom = red.pair.domain;
  double lo = -12.0, hi = 12.0;
  if (dom.kind == BoundaryKind::half_line_left) {
    hi = std::max(12.0, dom.left + 1.0);
    lo = dom.left + 1e-3 * (hi - dom.left);
  } else if (dom.kind == BoundaryKind::custom) {
    lo = dom.left;
    hi = dom.right;
  }
  const Grid probe(lo, hi, 2001);
  const auto xs = probe.nodes();
  std::vector<double> wv(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) wv[i] = red.w_eff.value(xs[i]);
  const auto expo = detail::cumulative_trapezoid(wv, probe.h());
  if (detail::tails_confining(expo)) {
    red.zero_mode = ZeroModeSide::plus;  // exp(-Int w) normalizable
  } else {
    std::vector<double> neg(expo.size());
    for (std::size_t i = 0; i < expo.size(); ++i) neg[i] = -expo[i];
    red.zero_mode = detail::tails_confining(neg) ? ZeroModeSide::minus
                                                 : ZeroModeSide::none;
  }

  // Confinement heuristic: the potential must rise above its minimum toward
  // every OPEN end. Walls (the pole of a half line, the ends of a finite
  // box) confine on their own.
  if (dom.kind == BoundaryKind::custom) {
    red.has_discrete_spectrum = true;
  } else {
    double vmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i)
      vmin = std::min(vmin, red.pair.v_plus(xs[i]));
    double open_end_floor = red.pair.v_plus(xs.back());
    if (dom.kind == BoundaryKind::full_line)
      open_end_floor = std::min(open_end_floor, red.pair.v_plus(xs.front()));
    red.has_discrete_spectrum = open_end_floor - vmin > 1.0;
  }
  return red;
}

std::pair<double, double> dirac_energy(double schrodinger_eps,
                                       double fermi_velocity) {
  if (schrodinger_eps < 0.0)
    throw NegativeEigenvalueError(
        "dirac_energy: negative Schrödinger eigenvalue (discretization "
        "artifact; the exact reduced spectrum is nonnegative)");
  const double e = fermi_velocity * std::sqrt(schrodinger_eps);
  return {e, e == 0.0 ? 0.0 : -e};
}

LinearFieldReduction linear_field_superpotential(double lambda_slope,
                                                 double mu, double k) {
  if (!(lambda_slope > 0.0))
    throw NonConfiningError(
        "linear field: slope must be positive for a discrete spectrum");
  LinearFieldReduction out;
  out.w = Superpotential::linear(lambda_slope, k + mu);
  out.rule.omega = 2.0 * lambda_slope;
  return out;
}

}  // namespace susyqm
