#pragma once

#include <vector>

#include "susyqm/grid.hpp"
#include "susyqm/partner.hpp"
#include "susyqm/spectrum.hpp"
#include "susyqm/tridiagonal.hpp"

namespace susyqm {

struct EigenOptions {
  double eigenvalue_tol = 1e-10;  // bisection interval width, relative floor 1
  double residual_tol = 1e-8;     // certificate on ||H psi - E psi||_2
  bool want_vectors = true;
  int max_inverse_restarts = 5;
};

// m lowest eigenpairs by bisection on the Sturm sign-agreement count,
// eigenvectors by inverse iteration. Requires n >= 16 and m <= n.
// Throws ConvergenceFailureError if an eigenpair cannot meet residual_tol.
Spectrum eigen_lowest(const TridiagonalOperator& op, int m,
                      const EigenOptions& opts = {});

// Number of eigenvalues of op strictly below sigma (Sturm count).
int sturm_count_below(const TridiagonalOperator& op, double sigma);

// Sign changes over the interior of a sampled eigenvector, ignoring entries
// below 1e-9 of the max amplitude. Level k must show exactly k of them.
int interior_sign_changes(const std::vector<double>& v);

// ---------------------------------------------------------------------------
// Domain-aware solve drivers

struct GuardOptions {
  double eps0_fraction = 1e-3;  // initial guard: eps = fraction * (b - wall)
  double drift_tol = 1e-6;      // max level drift between successive halvings
  int max_halvings = 40;
};

struct SolveConfig {
  double box = 12.0;  // full line solves on [-box, box]; half line on (wall+eps, box]
  int n = 3000;
  int m = 8;
  GuardOptions guard;
  EigenOptions eig;
};

struct SolveOutcome {
  Spectrum spectrum;
  Grid grid;
  double guard_epsilon = 0.0;  // 0 for unguarded grids
  double guard_drift = 0.0;
  int guard_halvings = 0;
  bool guard_converged = true;
};

// Solve -psi'' + V psi = E psi on the grid implied by `domain`:
// full line -> [-box, box]; half_line_left -> guard-refined (wall+eps, box];
// custom -> the stated box, unguarded.
SolveOutcome solve_potential(const PotentialFn& v, const Domain& domain,
                             const SolveConfig& cfg);

struct PairSolve {
  SolveOutcome plus;
  SolveOutcome minus;
};

// Solve both members on one shared grid; for guarded domains the epsilon
// schedule is driven by the worse of the two drifts so the spectra stay
// comparable level by level.
PairSolve solve_pair(const PartnerPair& pair, const SolveConfig& cfg);

}  // namespace susyqm
