#pragma once

#include <stdexcept>
#include <string>

namespace susyqm {

// Malformed user-facing input (CLI flags, JSON specs, family strings).
// The workbench maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested at (or a grid touching) a declared pole.
class SingularPointError : public std::domain_error {
 public:
  SingularPointError(const std::string& what, double where)
      : std::domain_error(what), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_ = 0.0;
};

// Tabulated family queried outside its abscissae.
class OutOfRangeError : public std::out_of_range {
 public:
  explicit OutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

// Point outside a potential's finite domain of definition.
class OutOfDomainError : public std::domain_error {
 public:
  explicit OutOfDomainError(const std::string& what) : std::domain_error(what) {}
};

// Field slope that cannot produce a discrete spectrum.
class NonConfiningError : public std::domain_error {
 public:
  explicit NonConfiningError(const std::string& what) : std::domain_error(what) {}
};

// Supercritical inverse-square coupling: the indicial exponent is complex.
class ComplexIndexError : public std::domain_error {
 public:
  explicit ComplexIndexError(const std::string& what) : std::domain_error(what) {}
};

// Parameter choice collapses the superpotential to a constant.
class DegenerateError : public std::domain_error {
 public:
  explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

class GridTooCoarseError : public std::invalid_argument {
 public:
  explicit GridTooCoarseError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Asked to map a negative Schrödinger eigenvalue to a Dirac energy
// (discretization artifact; the exact problem has a nonnegative spectrum).
class NegativeEigenvalueError : public std::domain_error {
 public:
  explicit NegativeEigenvalueError(const std::string& what)
      : std::domain_error(what) {}
};

// An iterative routine exhausted its iteration cap without meeting its
// certificate. The workbench maps these to exit code 3.
class ConvergenceFailureError : public std::runtime_error {
 public:
  explicit ConvergenceFailureError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace susyqm
