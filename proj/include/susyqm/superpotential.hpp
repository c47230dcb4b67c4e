#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "susyqm/errors.hpp"

namespace susyqm {

// Boundary-condition tag for the natural domain of a potential or pair.
enum class BoundaryKind { full_line, half_line_left, custom };

struct Domain {
  BoundaryKind kind = BoundaryKind::full_line;
  // For half_line_left, `left` is the wall/pole coordinate and the domain is
  // (left, +inf). For custom, [left, right] is a finite box.
  double left = 0.0;
  double right = 0.0;

  static Domain full_line() { return {BoundaryKind::full_line, 0.0, 0.0}; }
  static Domain half_line_left(double wall) {
    return {BoundaryKind::half_line_left, wall, 0.0};
  }
  static Domain custom(double left, double right) {
    return {BoundaryKind::custom, left, right};
  }
};

// W(x) = slope_half * x + offset
struct LinearW {
  double slope_half = 1.0;
  double offset = 0.0;
};

// W(x) = k + l*x + z/x + t, pole at x = 0 when z != 0
struct LinearInverseW {
  double k = 0.0;
  double l = 1.0;
  double z = 0.0;
  double t = 0.0;
};

// W(x) = r*(eta*x + 1) - s/(eta*x + 1) + offset, pole at x = -1/eta.
// `offset` defaults to 0 and exists so a constant background (e.g. a
// wavenumber absorbed into an effective superpotential) stays exactly
// representable.
struct IsotonicShiftedW {
  double r = 1.0;
  double s = 1.0;
  double eta = 1.0;
  double offset = 0.0;
};

// Sampled superpotential on >= 3 strictly increasing abscissae.
// Node derivatives use 3-point Lagrange differentiation (central in the
// interior, one-sided second order at the ends); off-node queries
// interpolate values and node derivatives linearly.
struct TabulatedW {
  std::vector<double> xs;
  std::vector<double> ws;
};

struct WEval {
  double value = 0.0;
  double derivative = 0.0;
};

class Superpotential {
 public:
  using Variant =
      std::variant<LinearW, LinearInverseW, IsotonicShiftedW, TabulatedW>;

  Superpotential() : v_(LinearW{}) {}
  explicit Superpotential(Variant v);

  static Superpotential linear(double slope_half, double offset = 0.0) {
    return Superpotential(LinearW{slope_half, offset});
  }
  static Superpotential constant(double w0) {
    return Superpotential(LinearW{0.0, w0});
  }
  static Superpotential linear_inverse(double k, double l, double z, double t) {
    return Superpotential(LinearInverseW{k, l, z, t});
  }
  static Superpotential isotonic_shifted(double r, double s, double eta,
                                         double offset = 0.0) {
    return Superpotential(IsotonicShiftedW{r, s, eta, offset});
  }
  static Superpotential tabulated(std::vector<double> xs,
                                  std::vector<double> ws) {
    return Superpotential(TabulatedW{std::move(xs), std::move(ws)});
  }

  double value(double x) const;
  double derivative(double x) const;
  WEval eval(double x) const { return {value(x), derivative(x)}; }

  // Pole location, if the family declares one.
  std::optional<double> singular_point() const;

  // Full line for regular families, half line right of the pole for the
  // singular ones, the sampled box for tabulated data.
  Domain natural_domain() const;

  const Variant& variant() const { return v_; }
  std::string family_name() const;

 private:
  Variant v_;
  // Precomputed node derivatives for the tabulated family.
  std::vector<double> tab_derivs_;

  void validate_and_prepare();
};

}  // namespace susyqm
