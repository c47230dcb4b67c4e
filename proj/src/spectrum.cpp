#include "susyqm/spectrum.hpp"

#include "susyqm/errors.hpp"

namespace susyqm {

std::vector<double> level_spacing(const Spectrum& spec) {
  if (spec.eigenvalues.size() < 2)
    throw ConfigError("level_spacing: need at least two levels");
  std::vector<double> gaps(spec.eigenvalues.size() - 1);
  for (std::size_t i = 0; i + 1 < spec.eigenvalues.size(); ++i)
    gaps[i] = spec.eigenvalues[i + 1] - spec.eigenvalues[i];
  return gaps;
}

}  // namespace susyqm
