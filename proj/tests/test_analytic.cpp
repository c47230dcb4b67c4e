#include <doctest.h>

#include <cmath>
#include <random>

#include "susyqm/analytic.hpp"
#include "susyqm/eigensolver.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/partner.hpp"
#include "susyqm/potentials.hpp"

using namespace susyqm;

TEST_CASE("quantization energies of the x^2 - 1 well") {
  const QuantizationInput plus{1.0, 0.0, -1.0, Branch::plus};
  for (int n = 0; n < 3; ++n)
    CHECK(quantization_energy(plus, n) == doctest::Approx(4.0 * n + 2.0));
  const QuantizationInput minus{1.0, 0.0, -1.0, Branch::minus};
  for (int n = 0; n < 3; ++n)
    CHECK(quantization_energy(minus, n) == doctest::Approx(4.0 * n));
}

TEST_CASE("quantization energies with inverse-square coupling c = 2") {
  const QuantizationInput q{1.0, 2.0, -1.0, Branch::plus};
  for (int n = 0; n < 3; ++n)
    CHECK(quantization_energy(q, n) == doctest::Approx(4.0 * n + 4.0));
}

TEST_CASE("constraint round trip recovers the integer exactly") {
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const QuantizationInput q{0.5 + 2.0 * uni(rng), 3.0 * uni(rng),
                              -2.0 + 4.0 * uni(rng),
                              uni(rng) < 0.5 ? Branch::plus : Branch::minus};
    const int n = trial % 9;
    const double back = quantization_constraint(q, quantization_energy(q, n));
    CHECK(std::abs(back + n) < 1e-12);
  }
}

TEST_CASE("supercritical coupling raises ComplexIndex") {
  const QuantizationInput q{1.0, -0.3, 0.0, Branch::plus};
  CHECK_THROWS_AS(quantization_energy(q, 0), ComplexIndexError);
  CHECK_THROWS_AS(quantization_constraint(q, 1.0), ComplexIndexError);
}

TEST_CASE("regular branch matches half-line numerics, irregular does not") {
  SolveConfig cfg;
  cfg.m = 3;
  const auto out = solve_potential([](double x) { return x * x - 1.0; },
                                   Domain::half_line_left(0.0), cfg);
  const QuantizationInput regular{1.0, 0.0, -1.0, Branch::plus};
  const QuantizationInput irregular{1.0, 0.0, -1.0, Branch::minus};
  for (int n = 0; n < 3; ++n) {
    CHECK(std::abs(quantization_energy(regular, n) -
                   out.spectrum.eigenvalues[static_cast<std::size_t>(n)]) <
          1e-2);
    CHECK(std::abs(quantization_energy(irregular, n) -
                   out.spectrum.eigenvalues[static_cast<std::size_t>(n)]) >
          1.0);
  }
}

TEST_CASE("isochronous energy rule as printed") {
  CHECK(isochronous_energy_formula(0, 0.0, -1) == doctest::Approx(2.0));
  CHECK(isochronous_energy_formula(2, 0.0, -1) == doctest::Approx(10.0));
  // Direct substitution also gives 4n + 2 on the plus side, which is one of
  // the documented internal inconsistencies surfaced by the report.
  CHECK(isochronous_energy_formula(0, 0.0, +1) == doctest::Approx(2.0));
  CHECK(isochronous_energy_formula(0, -1.0, +1) == doctest::Approx(0.0));
  CHECK(isochronous_energy_formula(1, -1.0, +1) == doctest::Approx(4.0));
  CHECK_THROWS_AS(isochronous_energy_formula(0, 0.0, 2), ConfigError);
}

TEST_CASE("isochronous energy radicand is a perfect square for q = +/-1") {
  // 1 + 4(b^2 + qb) = (2b + q)^2, so the formula never goes complex here.
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double beta = uni(rng);
    const int q = trial % 2 == 0 ? 1 : -1;
    const double direct = isochronous_energy_formula(2, beta, q);
    const double simplified =
        4.0 * 2 + 2.0 * (beta + 1.0) - q * (std::abs(2.0 * beta + q) - 1.0);
    CHECK(direct == doctest::Approx(simplified).epsilon(1e-13));
  }
}

TEST_CASE("isochronous rule agrees with the quantization energy on the "
          "matching branch") {
  // The minus-member well is x^2 + (b^2 - b)/x^2 + (2b + 1); for beta = 0
  // that is a = 1, c = 0, v0 = +1, and the rule picks the lower branch.
  const QuantizationInput q{1.0, 0.0, 1.0, Branch::minus};
  for (int n = 0; n < 5; ++n)
    CHECK(isochronous_energy_formula(n, 0.0, -1) ==
          doctest::Approx(quantization_energy(q, n)).epsilon(1e-13));
}

TEST_CASE("isotonic match: upper sign at Omega=2, eta=1") {
  const auto m = isotonic_match(2.0, 1.0, MatchSign::upper);
  CHECK(m.r == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.s == doctest::Approx(1.0));
  CHECK(m.lambda_shift == doctest::Approx(-4.0 + std::sqrt(2.0)));
  CHECK(m.physical);
}

TEST_CASE("isotonic match: lower sign is computed but flagged non-physical") {
  const auto m = isotonic_match(2.0, 1.0, MatchSign::lower);
  CHECK(m.s == doctest::Approx(-2.0));
  CHECK_FALSE(m.physical);
  CHECK(m.lambda_shift == doctest::Approx(-4.0 - 5.0 * std::sqrt(2.0)));
}

TEST_CASE("isotonic match residual oracle stays below 1e-12 for both signs") {
  for (const auto sign : {MatchSign::upper, MatchSign::lower}) {
    const auto m = isotonic_match(2.0, 1.0, sign);
    const auto pair = partner_potentials(
        Superpotential::isotonic_shifted(m.r, m.s, m.eta));
    for (int i = 0; i < 200; ++i) {
      const double x = -0.9 + 4.9 * (i + 0.5) / 200.0;
      const double lhs = pair.v_minus(x) + m.lambda_shift;
      const double rhs = isotonic_potential(2.0, 1.0, x);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("isotonic match degenerates without curvature") {
  CHECK_THROWS_AS(isotonic_match(1.0, 0.0, MatchSign::upper), DegenerateError);
  CHECK_THROWS_AS(isotonic_match(0.0, 1.0, MatchSign::upper), DegenerateError);
  CHECK_THROWS_AS(isotonic_match(-2.0, 1.0, MatchSign::upper), DegenerateError);
}

TEST_CASE("oscillator rule") {
  CHECK(ho_energy(0, 2.0) == doctest::Approx(0.0));
  CHECK(ho_energy(3, 2.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(ho_energy(1, 0.0), ConfigError);
  CHECK_THROWS_AS(ho_energy(-1, 1.0), ConfigError);
}

TEST_CASE("oscillator rule matches the numeric shifted oscillator") {
  // -d^2 + (x + 2 kappa / omega)^2 omega^2/4 - omega/2 holds omega * n.
  const double omega = 2.0, kappa = 0.6;
  SolveConfig cfg;
  cfg.m = 4;
  const auto out = solve_potential(
      [&](double x) {
        const double y = x + 2.0 * kappa / omega;
        return 0.25 * omega * omega * y * y - 0.5 * omega;
      },
      Domain::full_line(), cfg);
  for (int n = 0; n < 4; ++n)
    CHECK(std::abs(out.spectrum.eigenvalues[static_cast<std::size_t>(n)] -
                   ho_energy(n, omega)) < 1e-3);
}
