#include <doctest.h>

#include <cmath>

#include "susyqm/eigensolver.hpp"
#include "susyqm/planar.hpp"
#include "susyqm/susy_checks.hpp"

using namespace susyqm;

TEST_CASE("planar quasi elements: constant scalar, gamma=0") {
  PlanarConfig cfg;
  cfg.vector_potential = VectorPotential::linear(1.0, 0.0);
  cfg.s0 = 0.7;
  cfg.delta = 0.2;
  const auto q = planar_quasi_elements(cfg);
  const Grid grid(-8.0, 8.0, 65);
  CHECK(offdiagonal_residual(q, grid) == 0.0);
  const double eps0 = cfg.s0 * cfg.s0 + cfg.delta;
  for (double x : {-2.0, 0.4, 3.0}) {
    CHECK(q.k11.c0_at(x).real() ==
          doctest::Approx(x * x + 1.0 + eps0).epsilon(1e-14));
    CHECK(q.k22.c0_at(x).real() ==
          doctest::Approx(x * x - 1.0 + eps0).epsilon(1e-14));
  }
  CHECK(q.k11.c2 == doctest::Approx(1.0));
}

TEST_CASE("planar quasi elements: pure kinetic when everything vanishes") {
  PlanarConfig cfg;
  cfg.vector_potential = VectorPotential::linear(0.0, 0.0, true);
  const auto q = planar_quasi_elements(cfg);
  for (double x : {-1.0, 0.0, 2.0}) {
    CHECK(q.k11.c0_at(x) == Complex{0.0, 0.0});
    CHECK(q.k22.c0_at(x) == Complex{0.0, 0.0});
  }
}

TEST_CASE("planar quasi elements: reduced-form shift and vF scaling") {
  PlanarConfig cfg;
  cfg.vector_potential = VectorPotential::linear(2.0, 0.5);
  cfg.delta = -0.25;  // K = H^2 - C^2/4 with C = 1
  cfg.fermi_velocity = 3.0;
  const auto q = planar_quasi_elements(cfg);
  const double vf2 = 9.0;
  for (double x : {-1.0, 1.0}) {
    const double a = 2.0 * x + 0.5;
    CHECK(q.k11.c0_at(x).real() ==
          doctest::Approx(vf2 * (a * a + 2.0) - 0.25).epsilon(1e-14));
  }
  CHECK(q.k11.c2 == doctest::Approx(vf2));
}

TEST_CASE("planar quasi elements: gamma couples off-diagonals to k + a_y") {
  PlanarConfig cfg;
  cfg.vector_potential = VectorPotential::linear(1.0, 0.0);
  cfg.wavenumber_k = 0.3;
  cfg.gamma = 0.5;
  cfg.fermi_velocity = 2.0;
  const auto q = planar_quasi_elements(cfg);
  const double x = 1.2;
  CHECK(q.k12.c1_at(x) == Complex{0.0, -2.0 * 2.0 * 0.5});
  CHECK(q.k12.c0_at(x) ==
        Complex{0.0, -2.0 * 2.0 * 0.5 * (0.3 + 1.2)});
  CHECK(q.k21.c0_at(x) == -q.k12.c0_at(x));
}

TEST_CASE("reduce_planar with a linear field") {
  const auto red = reduce_planar(VectorPotential::linear(1.0, 0.0), 0.0);
  for (double x : {-2.0, 0.5, 1.5}) {
    CHECK(red.pair.v_plus(x) == doctest::Approx(x * x - 1.0));
    CHECK(red.pair.v_minus(x) == doctest::Approx(x * x + 1.0));
  }
  CHECK(red.zero_mode == ZeroModeSide::plus);
  CHECK(red.has_discrete_spectrum);
  CHECK(red.w_eff.value(2.0) == doctest::Approx(2.0));
}

TEST_CASE("reduce_planar with the isochronous field a = x + 1/x") {
  const auto red =
      reduce_planar(VectorPotential::isochronous(1.0, 1.0, 0.0), 0.0);
  for (double x : {0.4, 1.0, 2.5}) {
    const double a = x + 1.0 / x;
    const double ap = 1.0 - 1.0 / (x * x);
    CHECK(red.pair.v_plus(x) == doctest::Approx(a * a - ap).epsilon(1e-13));
    CHECK(red.pair.v_minus(x) == doctest::Approx(a * a + ap).epsilon(1e-13));
  }
  CHECK(red.pair.domain.kind == BoundaryKind::half_line_left);
}

TEST_CASE("reduce_planar flags the empty-spectrum free case") {
  const auto red = reduce_planar(VectorPotential::linear(0.0, 0.0, true), 0.7);
  CHECK_FALSE(red.has_discrete_spectrum);
  CHECK(red.pair.v_plus(1.0) == doctest::Approx(0.49));
  CHECK(red.zero_mode == ZeroModeSide::none);
}

TEST_CASE("reduce_planar keeps the isotonic constant exactly") {
  const auto a = VectorPotential::isotonic(1.5, 0.8, 1.0, 0.25);
  const double k = 0.4;
  const auto red = reduce_planar(a, k);
  for (double x : {-0.5, 0.0, 1.0}) {
    const double expect = k + a.a_y(x);
    CHECK(red.w_eff.value(x) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("positivity constraints guard the field families") {
  CHECK_THROWS_AS(VectorPotential::linear(-1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(VectorPotential::isochronous(1.0, -0.5, 0.0), ConfigError);
  CHECK_THROWS_AS(VectorPotential::isotonic(-1.0, 1.0, 1.0), ConfigError);
  CHECK_NOTHROW(VectorPotential::linear(-1.0, 0.0, true));
  CHECK_NOTHROW(VectorPotential::isochronous(1.0, -0.5, 0.0, true));
}

TEST_CASE("dirac energy map") {
  const auto [ep, em] = dirac_energy(4.0, 1.0);
  CHECK(ep == doctest::Approx(2.0));
  CHECK(em == doctest::Approx(-2.0));
  const auto [e2p, e2m] = dirac_energy(9.0, 0.5);
  CHECK(e2p == doctest::Approx(1.5));
  CHECK(e2m == doctest::Approx(-1.5));
  CHECK_THROWS_AS(dirac_energy(-1e-3, 1.0), NegativeEigenvalueError);
}

TEST_CASE("linear field reduction: spectrum rule and SUSY pairing") {
  const auto red = linear_field_superpotential(1.0, 0.0, 0.0);
  CHECK(red.rule.omega == doctest::Approx(2.0));
  CHECK(red.rule.energy(3) == doctest::Approx(6.0));

  SolveConfig cfg;
  cfg.m = 6;
  const auto pair = partner_potentials(red.w);
  const auto ps = solve_pair(pair, cfg);
  for (int n = 0; n < 6; ++n)
    CHECK(std::abs(ps.plus.spectrum.eigenvalues[static_cast<std::size_t>(n)] -
                   red.rule.energy(n)) < 1e-3);
  // The partner member sits one rung up.
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(ps.minus.spectrum.eigenvalues[static_cast<std::size_t>(n)] -
                   red.rule.energy(n + 1)) < 1e-3);
}

TEST_CASE("linear field reduction: offset only recenters the oscillator") {
  const auto base = linear_field_superpotential(1.0, 0.0, 0.0);
  const auto shifted = linear_field_superpotential(1.0, 1.3, -0.4);
  SolveConfig cfg;
  cfg.m = 4;
  const auto s0 = solve_pair(partner_potentials(base.w), cfg);
  const auto s1 = solve_pair(partner_potentials(shifted.w), cfg);
  for (int n = 0; n < 4; ++n)
    CHECK(std::abs(s0.plus.spectrum.eigenvalues[static_cast<std::size_t>(n)] -
                   s1.plus.spectrum.eigenvalues[static_cast<std::size_t>(n)]) <
          1e-3);
}

TEST_CASE("linear field reduction rejects non-confining slopes") {
  CHECK_THROWS_AS(linear_field_superpotential(0.0, 0.0, 0.0),
                  NonConfiningError);
  CHECK_THROWS_AS(linear_field_superpotential(-2.0, 0.0, 0.0),
                  NonConfiningError);
}

TEST_CASE("reduced pair interlaces and maps to +/- Dirac energies") {
  const auto red = reduce_planar(VectorPotential::linear(1.0, 0.0), 0.2);
  SolveConfig cfg;
  cfg.m = 5;
  const auto ps = solve_pair(red.pair, cfg);
  const auto rep = susy_pairing_check(ps.plus.spectrum, ps.minus.spectrum, 1e-2);
  CHECK(rep.paired);
  CHECK(rep.mode == PairingMode::zero_mode_plus);
  for (double eps : ps.plus.spectrum.eigenvalues) {
    if (eps < 0.0) continue;  // zero mode may round slightly negative
    const auto [ep, em] = dirac_energy(eps, 2.5);
    CHECK(ep == doctest::Approx(-em));
  }
}
