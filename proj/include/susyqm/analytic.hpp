#pragma once

namespace susyqm {

enum class Branch { plus, minus };

// Data of the quartic-plus-inverse-square quantization problem
//   -y'' + (a^2 x^4 + b x^2 + c)/x^2 y = 0,  b = v0 - E,
// terminated to a polynomial by  b/(4a) + (1 +/- sqrt(1/4 + c))/2 = -n.
struct QuantizationInput {
  double a = 1.0;   // > 0
  double c = 0.0;   // inverse-square coefficient, needs 1/4 + c >= 0
  double v0 = 0.0;  // constant shift entering b = v0 - E
  Branch branch = Branch::plus;
};

// E = v0 + 4 a n + 2 a (1 +/- sqrt(1/4 + c)).
// Throws ComplexIndexError when 1/4 + c < 0.
double quantization_energy(const QuantizationInput& q, int n);

// Left-hand side of the termination constraint at the given energy;
// equals exactly -n for energies produced by quantization_energy.
double quantization_constraint(const QuantizationInput& q, double energy);

// Closed-form level rule for the isochronous pair, evaluated exactly as the
// printed formula states:
//   E = 4n + 2(beta + 1) - q (sqrt(1 + 4(beta^2 + q beta)) - 1),  q = +/-1.
// See the verification report for its empirical status per member.
double isochronous_energy_formula(int n, double beta, int q);

enum class MatchSign { upper, lower };

struct IsotonicMatch {
  double omega_cap = 0.0;
  double eta = 0.0;
  MatchSign sign = MatchSign::upper;
  double r = 0.0;             // sqrt(Omega)
  double s = 0.0;             // root of s^2 + eta s = Omega
  double lambda_shift = 0.0;  // added to v_minus to reach the isotonic form
  bool physical = false;      // r, s > 0
};

// Parameters (r, s, Lambda) such that v_minus of the shifted-isotonic
// superpotential plus Lambda reproduces isotonic_potential(Omega, eta, .)
// identically. Throws DegenerateError when Omega <= 0 or eta == 0.
IsotonicMatch isotonic_match(double omega_cap, double eta, MatchSign sign);

// Equally spaced oscillator rule E_n = omega * n, omega > 0.
double ho_energy(int n, double omega);

}  // namespace susyqm
