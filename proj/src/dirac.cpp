#include "susyqm/dirac.hpp"

#include <cmath>
#include <vector>

namespace susyqm {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_params(const DiracParams& p) {
  if (p.rest_mass_energy < 0.0)
    throw ConfigError("dirac: rest mass energy must be nonnegative");
}

}  // namespace

double BlockOperator::hermiticity_defect() const {
  const auto adj = matrix.adjoint().eval();
  return (matrix - adj).cwiseAbs().maxCoeff();
}

BlockOperator build_dirac(const DiracParams& params, const Grid& grid) {
  check_params(params);
  const int n = grid.n;
  const double h = grid.h();
  const double d = 1.0 / (2.0 * h);

  BlockOperator op;
  op.grid = grid;
  op.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);

  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    const double mass = params.rest_mass_energy + params.scalar_s.value(x);
    const double wv = params.pseudo_w.value(x);
    if (!std::isfinite(mass) || !std::isfinite(wv))
      throw SingularPointError("dirac: potential not finite on a grid node", x);

    op.matrix(i, i) = mass;
    op.matrix(n + i, n + i) = -mass;
    // -i d/dx -/+ i W with a central difference; Dirichlet ends.
    op.matrix(i, n + i) = -kI * wv;
    op.matrix(n + i, i) = kI * wv;
    if (i + 1 < n) {
      op.matrix(i, n + i + 1) = -kI * d;
      op.matrix(n + i, i + 1) = -kI * d;
    }
    if (i > 0) {
      op.matrix(i, n + i - 1) = kI * d;
      op.matrix(n + i, i - 1) = kI * d;
    }
  }
  return op;
}

QuasiElements quasi_elements(const DiracParams& params) {
  check_params(params);
  const Superpotential w = params.pseudo_w;
  const Superpotential s = params.scalar_s;
  const double m = params.rest_mass_energy;
  const double gamma = params.gamma;
  const double delta = params.delta;

  QuasiElements q;
  q.k11.c2 = 1.0;
  q.k11.c0 = [w, s, m, gamma, delta](double x) -> Complex {
    const auto we = w.eval(x);
    const double sv = s.value(x);
    return we.value * we.value + we.derivative +
           2.0 * (m + gamma) * sv + sv * sv + 2.0 * gamma * m + delta;
  };
  q.k22.c2 = 1.0;
  q.k22.c0 = [w, s, m, gamma, delta](double x) -> Complex {
    const auto we = w.eval(x);
    const double sv = s.value(x);
    return we.value * we.value - we.derivative +
           2.0 * (m - gamma) * sv + sv * sv - 2.0 * gamma * m + delta;
  };
  if (gamma != 0.0) {
    q.k12.c1 = [gamma](double) { return -2.0 * kI * gamma; };
    q.k21.c1 = [gamma](double) { return -2.0 * kI * gamma; };
  }
  q.k12.c0 = [w, s, gamma](double x) {
    return kI * s.derivative(x) - 2.0 * kI * gamma * w.value(x);
  };
  q.k21.c0 = [w, s, gamma](double x) {
    return -kI * s.derivative(x) + 2.0 * kI * gamma * w.value(x);
  };
  return q;
}

QuasiElements perfect_square_elements(const DiracParams& params) {
  check_params(params);
  const Superpotential w = params.pseudo_w;
  const Superpotential s = params.scalar_s;
  const double m = params.rest_mass_energy;
  const double gamma = params.gamma;

  QuasiElements q = quasi_elements(params);  // off-diagonals are shared
  q.k11.c0 = [w, s, m, gamma](double x) -> Complex {
    const auto we = w.eval(x);
    const double shifted = s.value(x) + m + gamma;
    return we.value * we.value + we.derivative + shifted * shifted;
  };
  q.k22.c0 = [w, s, m, gamma](double x) -> Complex {
    const auto we = w.eval(x);
    const double shifted = s.value(x) + m - gamma;
    return we.value * we.value - we.derivative + shifted * shifted;
  };
  return q;
}

DiagonalReduction diagonal_reduction(double s0, const Superpotential& w,
                                     double m0c2) {
  DiagonalReduction red;
  const double shifted = m0c2 + s0;
  red.e0 = shifted * shifted;
  red.pair = partner_potentials(w, red.e0);
  return red;
}

// ---------------------------------------------------------------------------

namespace {

// Central first difference with Dirichlet ghosts, acting on one component.
std::vector<Complex> central_diff(const std::vector<Complex>& v, double h) {
  const std::size_t n = v.size();
  std::vector<Complex> y(n);
  const double d = 1.0 / (2.0 * h);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex left = i > 0 ? v[i - 1] : Complex{0.0, 0.0};
    const Complex right = i + 1 < n ? v[i + 1] : Complex{0.0, 0.0};
    y[i] = (right - left) * d;
  }
  return y;
}

// One K block applied to a component: c2 * (D_c D_c is -d^2) + c1 d + c0.
// The second-derivative part is the square of the same central difference
// used in build_dirac; see the header note.
std::vector<Complex> apply_block(const BlockCoeff& b,
                                 const std::vector<Complex>& v,
                                 const std::vector<double>& xs, double h) {
  const std::size_t n = v.size();
  std::vector<Complex> y(n, Complex{0.0, 0.0});
  if (b.c2 != 0.0) {
    const auto dd = central_diff(central_diff(v, h), h);
    for (std::size_t i = 0; i < n; ++i) y[i] -= b.c2 * dd[i];
  }
  if (b.c1) {
    const auto dv = central_diff(v, h);
    for (std::size_t i = 0; i < n; ++i) y[i] += b.c1(xs[i]) * dv[i];
  }
  if (b.c0)
    for (std::size_t i = 0; i < n; ++i) y[i] += b.c0(xs[i]) * v[i];
  return y;
}

}  // namespace

double quasi_matrix_residual(const DiracParams& params, const Grid& grid) {
  if (grid.n < 16)
    throw GridTooCoarseError("quasi_matrix_residual: need n >= 16");
  const int n = grid.n;
  const double h = grid.h();
  const auto xs = grid.nodes();
  const QuasiElements q = quasi_elements(params);
  const BlockOperator dirac = build_dirac(params, grid);
  const double poly_const =
      params.delta - params.rest_mass_energy * params.rest_mass_energy;

  // Smooth spinor probes: Gaussian envelope times a quartic end window, as
  // in intertwining_residual.
  const double c = 0.5 * (grid.a + grid.b);
  const double sigma = (grid.b - grid.a) / 8.0;
  const double half_w = 0.5 * (grid.b - grid.a);
  auto profile = [&](int kind, double x) -> Complex {
    const double t = (x - c) / sigma;
    const double win_t = (x - grid.a) * (grid.b - x) / (half_w * half_w);
    const double env = std::exp(-0.5 * t * t) * win_t * win_t * win_t * win_t;
    switch (kind) {
      case 0: return env;
      case 1: return t * env;
      case 2: return Complex{0.0, 1.0} * std::sin(1.5 * t) * env;
      default: return (t * t - 1.0) * env;
    }
  };

  double worst = 0.0;
  for (int pu = 0; pu < 4; ++pu) {
    const int pl = (pu + 1) % 4;
    std::vector<Complex> up(static_cast<std::size_t>(n)),
        low(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      up[static_cast<std::size_t>(i)] = profile(pu, xs[static_cast<std::size_t>(i)]);
      low[static_cast<std::size_t>(i)] =
          profile(pl, xs[static_cast<std::size_t>(i)]);
    }

    // K v, assembled block by block from the coefficient descriptors.
    auto k_up = apply_block(q.k11, up, xs, h);
    {
      const auto k12 = apply_block(q.k12, low, xs, h);
      for (int i = 0; i < n; ++i)
        k_up[static_cast<std::size_t>(i)] += k12[static_cast<std::size_t>(i)];
    }
    auto k_low = apply_block(q.k22, low, xs, h);
    {
      const auto k21 = apply_block(q.k21, up, xs, h);
      for (int i = 0; i < n; ++i)
        k_low[static_cast<std::size_t>(i)] += k21[static_cast<std::size_t>(i)];
    }

    // H^2 v + 2 gamma H v + (delta - m^2) v from the assembled Dirac matrix.
    Eigen::VectorXcd v(2 * n);
    for (int i = 0; i < n; ++i) {
      v(i) = up[static_cast<std::size_t>(i)];
      v(n + i) = low[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXcd hv = dirac.matrix * v;
    const Eigen::VectorXcd poly =
        dirac.matrix * hv + 2.0 * params.gamma * hv + poly_const * v;

    // Interior max-norm; the composite stencil reaches two nodes, so two
    // rows at each end of each component are boundary-polluted.
    for (int i = 2; i + 2 < n; ++i) {
      worst = std::max(
          worst, std::abs(k_up[static_cast<std::size_t>(i)] - poly(i)));
      worst = std::max(
          worst, std::abs(k_low[static_cast<std::size_t>(i)] - poly(n + i)));
    }
  }
  return worst;
}

}  // namespace susyqm
