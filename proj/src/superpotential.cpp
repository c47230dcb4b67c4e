#include "susyqm/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace susyqm {

namespace {

constexpr double kPoleWindow = 1e-14;

// 3-point Lagrange derivative of the quadratic through (x0,y0..x2,y2),
// evaluated at xe. Exact for quadratics, second order otherwise.
double lagrange3_derivative(double x0, double x1, double x2, double y0,
                            double y1, double y2, double xe) {
  const double d0 = (2 * xe - x1 - x2) / ((x0 - x1) * (x0 - x2));
  const double d1 = (2 * xe - x0 - x2) / ((x1 - x0) * (x1 - x2));
  const double d2 = (2 * xe - x0 - x1) / ((x2 - x0) * (x2 - x1));
  return y0 * d0 + y1 * d1 + y2 * d2;
}

}  // namespace

Superpotential::Superpotential(Variant v) : v_(std::move(v)) {
  validate_and_prepare();
}

void Superpotential::validate_and_prepare() {
  if (const auto* tab = std::get_if<TabulatedW>(&v_)) {
    if (tab->xs.size() < 3)
      throw ConfigError("tabulated superpotential: need at least 3 abscissae");
    if (tab->xs.size() != tab->ws.size())
      throw ConfigError("tabulated superpotential: xs/ws size mismatch");
    for (std::size_t i = 1; i < tab->xs.size(); ++i)
      if (!(tab->xs[i] > tab->xs[i - 1]))
        throw ConfigError(
            "tabulated superpotential: abscissae must be strictly increasing");
    const auto& xs = tab->xs;
    const auto& ws = tab->ws;
    const std::size_t n = xs.size();
    tab_derivs_.resize(n);
    tab_derivs_[0] = lagrange3_derivative(xs[0], xs[1], xs[2], ws[0], ws[1],
                                          ws[2], xs[0]);
    for (std::size_t i = 1; i + 1 < n; ++i)
      tab_derivs_[i] = lagrange3_derivative(xs[i - 1], xs[i], xs[i + 1],
                                            ws[i - 1], ws[i], ws[i + 1], xs[i]);
    tab_derivs_[n - 1] =
        lagrange3_derivative(xs[n - 3], xs[n - 2], xs[n - 1], ws[n - 3],
                             ws[n - 2], ws[n - 1], xs[n - 1]);
  }
}

std::optional<double> Superpotential::singular_point() const {
  if (const auto* li = std::get_if<LinearInverseW>(&v_)) {
    if (li->z != 0.0) return 0.0;
    return std::nullopt;
  }
  if (const auto* iso = std::get_if<IsotonicShiftedW>(&v_)) {
    if (iso->eta != 0.0) return -1.0 / iso->eta;
    return std::nullopt;
  }
  return std::nullopt;
}

Domain Superpotential::natural_domain() const {
  if (const auto* tab = std::get_if<TabulatedW>(&v_))
    return Domain::custom(tab->xs.front(), tab->xs.back());
  if (auto pole = singular_point()) return Domain::half_line_left(*pole);
  return Domain::full_line();
}

std::string Superpotential::family_name() const {
  if (std::holds_alternative<LinearW>(v_)) return "linear";
  if (std::holds_alternative<LinearInverseW>(v_)) return "linear_inverse";
  if (std::holds_alternative<IsotonicShiftedW>(v_)) return "isotonic";
  return "tabulated";
}

double Superpotential::value(double x) const {
  if (const auto* lin = std::get_if<LinearW>(&v_))
    return lin->slope_half * x + lin->offset;

  if (const auto* li = std::get_if<LinearInverseW>(&v_)) {
    if (li->z != 0.0 && std::abs(x) <= kPoleWindow)
      throw SingularPointError("superpotential pole at x = 0", 0.0);
    const double inv = (li->z != 0.0) ? li->z / x : 0.0;
    return li->k + li->l * x + inv + li->t;
  }

  if (const auto* iso = std::get_if<IsotonicShiftedW>(&v_)) {
    const double u = iso->eta * x + 1.0;
    if (std::abs(u) <= kPoleWindow)
      throw SingularPointError("superpotential pole at x = -1/eta",
                               -1.0 / iso->eta);
    return iso->r * u - iso->s / u + iso->offset;
  }

  const auto& tab = std::get<TabulatedW>(v_);
  const auto& xs = tab.xs;
  if (x < xs.front() || x > xs.back())
    throw OutOfRangeError("tabulated superpotential: x outside abscissae");
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = std::min<std::size_t>(
      static_cast<std::size_t>(it - xs.begin()), xs.size() - 1);
  const std::size_t lo = hi == 0 ? 0 : hi - 1;
  if (hi == lo) return tab.ws[lo];
  const double f = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return (1.0 - f) * tab.ws[lo] + f * tab.ws[hi];
}

double Superpotential::derivative(double x) const {
  if (const auto* lin = std::get_if<LinearW>(&v_)) return lin->slope_half;

  if (const auto* li = std::get_if<LinearInverseW>(&v_)) {
    if (li->z != 0.0 && std::abs(x) <= kPoleWindow)
      throw SingularPointError("superpotential pole at x = 0", 0.0);
    const double inv = (li->z != 0.0) ? -li->z / (x * x) : 0.0;
    return li->l + inv;
  }

  if (const auto* iso = std::get_if<IsotonicShiftedW>(&v_)) {
    const double u = iso->eta * x + 1.0;
    if (std::abs(u) <= kPoleWindow)
      throw SingularPointError("superpotential pole at x = -1/eta",
                               -1.0 / iso->eta);
    return iso->r * iso->eta + iso->s * iso->eta / (u * u);
  }

  const auto& tab = std::get<TabulatedW>(v_);
  const auto& xs = tab.xs;
  if (x < xs.front() || x > xs.back())
    throw OutOfRangeError("tabulated superpotential: x outside abscissae");
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = std::min<std::size_t>(
      static_cast<std::size_t>(it - xs.begin()), xs.size() - 1);
  const std::size_t lo = hi == 0 ? 0 : hi - 1;
  if (hi == lo) return tab_derivs_[lo];
  const double f = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return (1.0 - f) * tab_derivs_[lo] + f * tab_derivs_[hi];
}

}  // namespace susyqm
