#include "susyqm/partner.hpp"

#include <algorithm>
#include <cmath>

namespace susyqm {

PartnerPair partner_potentials(const Superpotential& w, double lambda_offset) {
  PartnerPair pair;
  pair.lambda_offset = lambda_offset;
  pair.domain = w.natural_domain();
  pair.v_plus = [w, lambda_offset](double x) {
    const auto e = w.eval(x);
    return e.value * e.value - e.derivative + lambda_offset;
  };
  pair.v_minus = [w, lambda_offset](double x) {
    const auto e = w.eval(x);
    return e.value * e.value + e.derivative + lambda_offset;
  };
  return pair;
}

PartnerPair isochronous_pair(double z) {
  PartnerPair pair;
  pair.lambda_offset = 0.0;
  pair.domain = Domain::half_line_left(0.0);
  pair.v_plus = [z](double x) {
    return (2.0 * z - 1.0) + x * x + (z * z + z) / (x * x);
  };
  pair.v_minus = [z](double x) {
    return (2.0 * z + 1.0) + x * x + (z * z - z) / (x * x);
  };
  return pair;
}

namespace detail {

std::vector<double> cumulative_trapezoid(const std::vector<double>& f,
                                         double h) {
  std::vector<double> acc(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i)
    acc[i] = acc[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return acc;
}

bool tails_confining(const std::vector<double>& exponent, double margin) {
  if (exponent.size() < 2) return false;
  const double lo = *std::min_element(exponent.begin(), exponent.end());
  return exponent.front() - lo >= margin && exponent.back() - lo >= margin;
}

}  // namespace detail

GroundStateResult ground_state(const Superpotential& w, const Grid& grid) {
  const auto xs = grid.nodes();
  std::vector<double> wvals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) wvals[i] = w.value(xs[i]);

  const auto exponent = detail::cumulative_trapezoid(wvals, grid.h());
  const double lo = *std::min_element(exponent.begin(), exponent.end());

  GroundStateResult result;
  result.normalizable = detail::tails_confining(exponent);
  result.samples.resize(exponent.size());
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    result.samples[i] = std::exp(-(exponent[i] - lo));
    sum_sq += result.samples[i] * result.samples[i];
  }
  const double norm_sq = sum_sq * grid.h();  // Int exp(-2(I - lo))
  result.log_norm_integral = std::log(norm_sq) - 2.0 * lo;
  if (result.normalizable) {
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (double& s : result.samples) s *= scale;
  }
  return result;
}

}  // namespace susyqm
