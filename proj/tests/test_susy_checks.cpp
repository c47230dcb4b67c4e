#include <doctest.h>

#include <cmath>

#include "susyqm/susy_checks.hpp"

using namespace susyqm;

namespace {

Spectrum from_values(std::initializer_list<double> vals) {
  Spectrum s;
  s.eigenvalues = vals;
  return s;
}

}  // namespace

TEST_CASE("pairing check on ideal ladders") {
  const auto plus = from_values({0.0, 2.0, 4.0, 6.0});
  const auto minus = from_values({2.0, 4.0, 6.0, 8.0});
  const auto rep = susy_pairing_check(plus, minus, 1e-6);
  CHECK(rep.paired);
  CHECK(rep.mode == PairingMode::zero_mode_plus);
  CHECK(rep.zero_mode_value == doctest::Approx(0.0));
  CHECK(rep.max_abs_deviation < 1e-12);
}

TEST_CASE("pairing check flags a shifted spectrum at level 0") {
  const auto plus = from_values({0.0, 2.0, 4.0, 6.0});
  const auto shifted = from_values({2.5, 4.5, 6.5, 8.5});
  const auto rep = susy_pairing_check(plus, shifted, 1e-2);
  CHECK_FALSE(rep.paired);
  CHECK(rep.mode == PairingMode::mismatch);
  CHECK(rep.first_mismatch_level == 0);
}

TEST_CASE("pairing check recognizes the mirrored and broken arrangements") {
  const auto a = from_values({1.0, 3.0, 5.0});
  const auto b = from_values({-1.0, 1.0, 3.0});
  const auto rep = susy_pairing_check(a, b, 1e-6);
  CHECK(rep.mode == PairingMode::zero_mode_minus);
  CHECK(rep.zero_mode_value == doctest::Approx(-1.0));

  const auto rep2 = susy_pairing_check(a, a, 1e-6);
  CHECK(rep2.mode == PairingMode::identical);
}

TEST_CASE("pairing check on numerical W = x - 1/x spectra") {
  const auto pair =
      partner_potentials(Superpotential::linear_inverse(0.0, 1.0, -1.0, 0.0));
  SolveConfig cfg;
  cfg.m = 4;
  const auto ps = solve_pair(pair, cfg);
  const auto rep = susy_pairing_check(ps.plus.spectrum, ps.minus.spectrum, 1e-2);
  CHECK(rep.paired);
  CHECK(rep.mode == PairingMode::zero_mode_plus);
  CHECK(std::abs(rep.zero_mode_value) < 1e-4);
}

TEST_CASE("intertwining residual decays at second order for W = x") {
  const Superpotential w = Superpotential::linear(1.0, 0.0);
  const double r1 = intertwining_residual(w, Grid(-10.0, 10.0, 200));
  const double r2 = intertwining_residual(w, Grid(-10.0, 10.0, 400));
  const double h1 = Grid(-10.0, 10.0, 200).h();
  const double h2 = Grid(-10.0, 10.0, 400).h();
  const double order = std::log(r1 / r2) / std::log(h1 / h2);
  CHECK(order > 1.9);
  // Ratio close to 4 when h halves.
  CHECK(r1 / r2 > 3.5);
  CHECK(r1 / r2 < 4.6);
}

TEST_CASE("constant superpotential intertwines exactly") {
  CHECK(intertwining_residual(Superpotential::constant(1.3),
                              Grid(-8.0, 8.0, 300)) < 1e-12);
}

TEST_CASE("intertwining residual decays on the guarded half line") {
  const auto w = Superpotential::linear_inverse(0.0, 1.0, -1.0, 0.0);
  const double r1 = intertwining_residual(w, Grid(0.012, 12.0, 1500));
  const double r2 = intertwining_residual(w, Grid(0.012, 12.0, 3001));
  CHECK(std::isfinite(r1));
  CHECK(r2 < r1);
}
