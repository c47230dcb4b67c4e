#include "susyqm/csv.hpp"

#include <cstdio>

namespace susyqm {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::string out = "n,eigenvalue,residual\n";
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const double resid = i < spec.residuals.size() ? spec.residuals[i] : 0.0;
    out += std::to_string(i);
    out += ',';
    out += format_value(spec.eigenvalues[i]);
    out += ',';
    out += format_value(resid);
    out += '\n';
  }
  return out;
}

std::string partners_to_csv(const PartnerPair& pair, const Grid& grid) {
  std::string out = "x,v_plus,v_minus\n";
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    out += format_value(x);
    out += ',';
    out += format_value(pair.v_plus(x));
    out += ',';
    out += format_value(pair.v_minus(x));
    out += '\n';
  }
  return out;
}

}  // namespace susyqm
