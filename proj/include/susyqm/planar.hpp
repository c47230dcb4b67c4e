#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "susyqm/partner.hpp"
#include "susyqm/quasi.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

// Landau-gauge vector potential component a_y(x), with charge and velocity
// factors absorbed so the effective superpotential is k + a_y(x).
struct LinearField {
  double lambda = 1.0;  // a = lambda * x + mu; lambda, mu > 0
  double mu = 0.0;
};
struct IsochronousField {
  double p = 1.0, q = 1.0, r = 0.0;  // a = p x + q/x + r; p, q, r > 0
};
struct IsotonicField {
  double r = 1.0, s = 1.0, eta = 1.0;
  double upsilon = 0.0;  // a = r(eta x+1) - s/(eta x+1) + upsilon
};
struct TabulatedField {
  std::vector<double> xs;
  std::vector<double> as;
};

class VectorPotential {
 public:
  using Variant =
      std::variant<LinearField, IsochronousField, IsotonicField, TabulatedField>;

  // The stated positivity constraints on family parameters are enforced
  // unless override_positivity is set.
  explicit VectorPotential(Variant v, bool override_positivity = false);

  static VectorPotential linear(double lambda, double mu,
                                bool override_positivity = false) {
    return VectorPotential(LinearField{lambda, mu}, override_positivity);
  }
  static VectorPotential isochronous(double p, double q, double r,
                                     bool override_positivity = false) {
    return VectorPotential(IsochronousField{p, q, r}, override_positivity);
  }
  static VectorPotential isotonic(double r, double s, double eta,
                                  double upsilon = 0.0,
                                  bool override_positivity = false) {
    return VectorPotential(IsotonicField{r, s, eta, upsilon},
                           override_positivity);
  }
  static VectorPotential tabulated(std::vector<double> xs,
                                   std::vector<double> as) {
    return VectorPotential(TabulatedField{std::move(xs), std::move(as)}, true);
  }

  double a_y(double x) const { return w_.value(x); }
  double a_y_derivative(double x) const { return w_.derivative(x); }
  std::optional<double> singular_point() const { return w_.singular_point(); }
  Domain natural_domain() const { return w_.natural_domain(); }

  // Exact effective superpotential k + a_y(x).
  Superpotential to_superpotential(double wavenumber_k) const;

  const Variant& variant() const { return v_; }
  bool positivity_overridden() const { return override_; }
  std::string family_name() const;

 private:
  Variant v_;
  bool override_ = false;
  Superpotential w_;  // a_y represented as a superpotential family
};

struct PlanarConfig {
  VectorPotential vector_potential = VectorPotential::linear(1.0, 0.0);
  double wavenumber_k = 0.0;
  double s0 = 0.0;     // constant scalar mass term
  double gamma = 0.0;
  double delta = 0.0;
  double fermi_velocity = 1.0;  // > 0
};

// Blocks of K = H_P^2 + 2 gamma H_P + delta after the plane-wave substitution
// d/dy -> i k. Diagonal blocks: vF^2 [ -d^2 + (a_y + k)^2 +/- a_y' ] + S0^2
// +/- 2 gamma S0 + delta; off-diagonal blocks vanish when gamma = 0 (the
// scalar term is constant here, so its derivative never contributes).
QuasiElements planar_quasi_elements(const PlanarConfig& cfg);

enum class ZeroModeSide { plus, minus, none };

struct ReducedPlanar {
  PartnerPair pair;       // v_plus = w^2 - w', v_minus = w^2 + w'
  Superpotential w_eff;   // k + a_y
  ZeroModeSide zero_mode = ZeroModeSide::none;
  bool has_discrete_spectrum = true;
};

// Reduce the planar problem at conserved wavenumber k to the 1D partner
// pair. The spinor-up component obeys v_minus, the spinor-down one v_plus;
// the zero mode sits on whichever side exp(-/+Int w_eff) is normalizable
// (decided numerically on a probe grid over the natural domain).
ReducedPlanar reduce_planar(const VectorPotential& a, double wavenumber_k);

// Dirac energies +/- vF sqrt(eps) of a reduced Schrödinger eigenvalue.
// Throws NegativeEigenvalueError for eps < 0.
std::pair<double, double> dirac_energy(double schrodinger_eps,
                                       double fermi_velocity);

struct HoSpectrumRule {
  double omega = 0.0;
  double energy(int n) const { return omega * n; }
};

struct LinearFieldReduction {
  Superpotential w;  // slope lambda, offset k + mu
  HoSpectrumRule rule;
};

// Effective superpotential of the linear field and the equally spaced level
// rule (spacing omega = 2 * lambda_slope) of its oscillator member.
// Throws NonConfiningError when lambda_slope <= 0.
LinearFieldReduction linear_field_superpotential(double lambda_slope,
                                                 double mu, double k);

}  // namespace susyqm
