#pragma once

#include <vector>

namespace susyqm {

// Lowest eigenpairs of a discretized 1D Schrödinger operator.
// Eigenvalues are strictly increasing (Dirichlet problems in 1D are
// non-degenerate); residuals are ||H psi - E psi||_2 with ||psi||_2 = 1.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;  // empty when not requested
  std::vector<double> residuals;

  int levels() const { return static_cast<int>(eigenvalues.size()); }
};

// Consecutive differences; needs at least two levels.
std::vector<double> level_spacing(const Spectrum& spec);

}  // namespace susyqm
