#include "susyqm/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace susyqm {

namespace {

// Sturm sign count: number of eigenvalues strictly below sigma, via the
// standard pivoted recurrence d_i = (a_i - sigma) - b_{i-1}^2 / d_{i-1}.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off2,
                double sigma, double pivmin) {
  int count = 0;
  double d = diag[0] - sigma;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (std::abs(d) < pivmin) d = std::copysign(pivmin, d == 0.0 ? -1.0 : d);
    d = (diag[i] - sigma) - off2[i - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

struct Bounds {
  double lo, hi;
};

Bounds gershgorin(const std::vector<double>& diag,
                  const std::vector<double>& off) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return {lo - pad, hi + pad};
}

// k-th (0-based) eigenvalue by bisection; the interval is narrowed until its
// width falls below tol * max(1, |endpoint|).
double bisect_kth(const std::vector<double>& diag,
                  const std::vector<double>& off2, int k, Bounds bounds,
                  double tol, double pivmin) {
  double lo = bounds.lo, hi = bounds.hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max({1.0, std::abs(lo), std::abs(hi)}) ||
        mid == lo || mid == hi)
      break;
    if (sturm_count(diag, off2, mid, pivmin) >= k + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// One inverse-iteration solve of (T - lambda) x = b with partial pivoting
// (two-band fill-in), overwriting x.
void shifted_solve(const std::vector<double>& diag,
                   const std::vector<double>& off, double lambda,
                   std::vector<double>& x) {
  const std::size_t n = diag.size();
  std::vector<double> main(n), upper1(n, 0.0), upper2(n, 0.0), lower(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) main[i] = diag[i] - lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    upper1[i] = off[i];
    lower[i] = off[i];  // subdiagonal entry (i+1, i)
  }

  // Forward elimination with row swaps.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double piv = main[i];
    double sub = lower[i];
    if (std::abs(sub) > std::abs(piv)) {
      std::swap(main[i], lower[i]);
      std::swap(upper1[i], main[i + 1]);
      // row i had no (i, i+2) entry before the swap; row i+1 did not either,
      // but after swapping, row i picks up the old row i+1's upper entry.
      std::swap(upper2[i], upper1[i + 1]);
      std::swap(x[i], x[i + 1]);
      piv = main[i];
      sub = lower[i];
    }
    if (piv == 0.0) piv = main[i] = 1e-300;
    const double m = sub / piv;
    main[i + 1] -= m * upper1[i];
    upper1[i + 1] -= m * upper2[i];
    x[i + 1] -= m * x[i];
  }
  if (main[n - 1] == 0.0) main[n - 1] = 1e-300;

  // Back substitution.
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = x[ii];
    if (ii + 1 < n) acc -= upper1[ii] * x[ii + 1];
    if (ii + 2 < n) acc -= upper2[ii] * x[ii + 2];
    x[ii] = acc / main[ii];
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double n = norm2(v);
  if (n > 0.0)
    for (double& x : v) x /= n;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

int sturm_count_below(const TridiagonalOperator& op, double sigma) {
  std::vector<double> off2(op.off_diagonal.size());
  double max_off2 = 1.0;
  for (std::size_t i = 0; i < off2.size(); ++i) {
    off2[i] = op.off_diagonal[i] * op.off_diagonal[i];
    max_off2 = std::max(max_off2, off2[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_off2;
  return sturm_count(op.diagonal, off2, sigma, pivmin);
}

int interior_sign_changes(const std::vector<double>& v) {
  double amax = 0.0;
  for (double x : v) amax = std::max(amax, std::abs(x));
  const double floor = 1e-9 * amax;
  int changes = 0;
  int prev_sign = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (prev_sign != 0 && sign != prev_sign) ++changes;
    prev_sign = sign;
  }
  return changes;
}

Spectrum eigen_lowest(const TridiagonalOperator& op, int m,
                      const EigenOptions& opts) {
  const int n = static_cast<int>(op.diagonal.size());
  if (n < 16)
    throw GridTooCoarseError("eigen_lowest: need at least 16 grid points");
  if (m < 1 || m > n)
    throw ConfigError("eigen_lowest: level count must be in [1, n]");

  std::vector<double> off2(op.off_diagonal.size());
  double max_off2 = 1.0;
  for (std::size_t i = 0; i < off2.size(); ++i) {
    off2[i] = op.off_diagonal[i] * op.off_diagonal[i];
    max_off2 = std::max(max_off2, off2[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_off2;
  const Bounds bounds = gershgorin(op.diagonal, op.off_diagonal);

  Spectrum spec;
  spec.eigenvalues.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    spec.eigenvalues[static_cast<std::size_t>(k)] =
        bisect_kth(op.diagonal, off2, k, bounds, opts.eigenvalue_tol, pivmin);

  if (!opts.want_vectors) return spec;

  spec.eigenvectors.resize(static_cast<std::size_t>(m));
  spec.residuals.resize(static_cast<std::size_t>(m));
  const double scale =
      std::max({1.0, std::abs(bounds.lo), std::abs(bounds.hi)});

  for (int k = 0; k < m; ++k) {
    const double lambda = spec.eigenvalues[static_cast<std::size_t>(k)];
    // Tiny shift off the computed eigenvalue keeps the solve well defined.
    const double shifted = lambda + 1e-13 * scale;

    std::vector<double> v(static_cast<std::size_t>(n));
    double best_resid = std::numeric_limits<double>::infinity();
    std::vector<double> best_v;

    for (int restart = 0; restart <= opts.max_inverse_restarts; ++restart) {
      std::mt19937 rng(0x5eed0000u + 977u * static_cast<unsigned>(k) +
                       static_cast<unsigned>(restart));
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      for (double& x : v) x = uni(rng);
      normalize(v);

      for (int it = 0; it < 4 + 2 * restart; ++it) {
        shifted_solve(op.diagonal, op.off_diagonal, shifted, v);
        // Project out previously found vectors when levels are close.
        for (int j = 0; j < k; ++j) {
          const double gap =
              std::abs(lambda - spec.eigenvalues[static_cast<std::size_t>(j)]);
          if (gap < 1e-6 * scale) {
            const auto& vj = spec.eigenvectors[static_cast<std::size_t>(j)];
            const double c = dot(v, vj);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * vj[i];
          }
        }
        normalize(v);
      }

      auto hv = matvec(op, v);
      for (std::size_t i = 0; i < hv.size(); ++i) hv[i] -= lambda * v[i];
      const double resid = norm2(hv);
      if (resid < best_resid) {
        best_resid = resid;
        best_v = v;
      }
      if (best_resid <= opts.residual_tol) break;
    }

    if (best_resid > opts.residual_tol)
      throw ConvergenceFailureError(
          "eigen_lowest: inverse iteration residual " +
          std::to_string(best_resid) + " above tolerance at level " +
          std::to_string(k));

    // Fix an overall sign: first significant entry positive.
    double amax = 0.0;
    for (double x : best_v) amax = std::max(amax, std::abs(x));
    for (double x : best_v) {
      if (std::abs(x) > 1e-9 * amax) {
        if (x < 0.0)
          for (double& y : best_v) y = -y;
        break;
      }
    }

    spec.eigenvectors[static_cast<std::size_t>(k)] = std::move(best_v);
    spec.residuals[static_cast<std::size_t>(k)] = best_resid;
  }

  return spec;
}

// ---------------------------------------------------------------------------

namespace {

Grid guarded_grid(double wall, double box, int n, double eps) {
  return Grid(wall + eps, box, n, eps);
}

double max_level_drift(const Spectrum& a, const Spectrum& b) {
  const std::size_t m = std::min(a.eigenvalues.size(), b.eigenvalues.size());
  double drift = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    drift = std::max(drift, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  return drift;
}

}  // namespace

SolveOutcome solve_potential(const PotentialFn& v, const Domain& domain,
                             const SolveConfig& cfg) {
  SolveOutcome out;
  switch (domain.kind) {
    case BoundaryKind::full_line: {
      out.grid = Grid(-cfg.box, cfg.box, cfg.n);
      out.spectrum = eigen_lowest(discretize(v, out.grid), cfg.m, cfg.eig);
      return out;
    }
    case BoundaryKind::custom: {
      out.grid = Grid(domain.left, domain.right, cfg.n);
      out.spectrum = eigen_lowest(discretize(v, out.grid), cfg.m, cfg.eig);
      return out;
    }
    case BoundaryKind::half_line_left:
      break;
  }

  // Guarded half-line solve: shrink the wall offset until the levels settle.
  const double wall = domain.left;
  const double span = cfg.box - wall;
  if (span <= 0.0)
    throw ConfigError("solve_potential: box does not cover the half line");
  double eps = cfg.guard.eps0_fraction * span;
  out.grid = guarded_grid(wall, cfg.box, cfg.n, eps);
  out.spectrum = eigen_lowest(discretize(v, out.grid), cfg.m, cfg.eig);
  out.guard_converged = false;
  for (int halving = 1; halving <= cfg.guard.max_halvings; ++halving) {
    const double next_eps = 0.5 * eps;
    Grid next_grid = guarded_grid(wall, cfg.box, cfg.n, next_eps);
    Spectrum next = eigen_lowest(discretize(v, next_grid), cfg.m, cfg.eig);
    const double drift = max_level_drift(out.spectrum, next);
    eps = next_eps;
    out.grid = next_grid;
    out.spectrum = std::move(next);
    out.guard_drift = drift;
    out.guard_halvings = halving;
    if (drift < cfg.guard.drift_tol) {
      out.guard_converged = true;
      break;
    }
  }
  out.guard_epsilon = eps;
  return out;
}

PairSolve solve_pair(const PartnerPair& pair, const SolveConfig& cfg) {
  PairSolve result;
  if (pair.domain.kind != BoundaryKind::half_line_left) {
    result.plus = solve_potential(pair.v_plus, pair.domain, cfg);
    result.minus = solve_potential(pair.v_minus, pair.domain, cfg);
    return result;
  }

  // Shared epsilon schedule so the two members stay on identical grids.
  const double wall = pair.domain.left;
  const double span = cfg.box - wall;
  if (span <= 0.0)
    throw ConfigError("solve_pair: box does not cover the half line");
  double eps = cfg.guard.eps0_fraction * span;
  Grid grid = guarded_grid(wall, cfg.box, cfg.n, eps);
  Spectrum sp = eigen_lowest(discretize(pair.v_plus, grid), cfg.m, cfg.eig);
  Spectrum sm = eigen_lowest(discretize(pair.v_minus, grid), cfg.m, cfg.eig);
  double drift = 0.0;
  int halvings = 0;
  bool converged = false;
  for (; halvings < cfg.guard.max_halvings && !converged;) {
    const double next_eps = 0.5 * eps;
    Grid next_grid = guarded_grid(wall, cfg.box, cfg.n, next_eps);
    Spectrum np = eigen_lowest(discretize(pair.v_plus, next_grid), cfg.m, cfg.eig);
    Spectrum nm =
        eigen_lowest(discretize(pair.v_minus, next_grid), cfg.m, cfg.eig);
    drift = std::max(max_level_drift(sp, np), max_level_drift(sm, nm));
    eps = next_eps;
    grid = next_grid;
    sp = std::move(np);
    sm = std::move(nm);
    ++halvings;
    converged = drift < cfg.guard.drift_tol;
  }

  result.plus.spectrum = std::move(sp);
  result.minus.spectrum = std::move(sm);
  result.plus.grid = result.minus.grid = grid;
  result.plus.guard_epsilon = result.minus.guard_epsilon = eps;
  result.plus.guard_drift = result.minus.guard_drift = drift;
  result.plus.guard_halvings = result.minus.guard_halvings = halvings;
  result.plus.guard_converged = result.minus.guard_converged = converged;
  return result;
}

}  // namespace susyqm
