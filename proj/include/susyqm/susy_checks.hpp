#pragma once

#include <string>
#include <vector>

#include "susyqm/eigensolver.hpp"
#include "susyqm/spectrum.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

enum class PairingMode {
  zero_mode_plus,   // spec_minus == spec_plus with its lowest level removed
  zero_mode_minus,  // the mirror arrangement
  identical,        // no unpaired level (broken pairing, equal spectra)
  mismatch
};

struct PairingReport {
  PairingMode mode = PairingMode::mismatch;
  bool paired = false;           // true for the three non-mismatch modes
  double zero_mode_value = 0.0;  // the unpaired level, when one exists
  double max_abs_deviation = 0.0;
  int first_mismatch_level = -1;  // -1 when none
  std::vector<double> level_deviations;
  std::string describe() const;
};

// Level-by-level comparison of two spectra within tol. Greedy in the sense
// that each hypothesis is accepted as soon as every compared level agrees
// within tol; the hypothesis with the smallest max deviation wins.
PairingReport susy_pairing_check(const Spectrum& spec_plus,
                                 const Spectrum& spec_minus, double tol);

// Max-norm of (L H_plus - H_minus L) applied to smooth boundary-decaying
// probe vectors, over interior nodes (two rows dropped at each end, where
// the composite stencil touches the Dirichlet ghosts). L = d/dx + W with a
// central first difference. Decays at the stencil order under refinement.
double intertwining_residual(const Superpotential& w, const Grid& grid);

}  // namespace susyqm
