#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "susyqm/eigensolver.hpp"

namespace susyqm {

// Provenance labels carried by every report row.
inline constexpr const char* kProvenancePrinted = "printed-formula";
inline constexpr const char* kProvenanceInText = "in-text-claim";
inline constexpr const char* kProvenanceOracle = "numerical-oracle";

struct CheckRow {
  std::string label;
  std::string provenance;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool mandatory = true;  // informational rows never fail a check
  std::string note;
};

struct CheckResult {
  std::string name;
  bool passed = true;  // over mandatory rows only
  double seconds = 0.0;
  std::vector<CheckRow> rows;
  std::string error;  // nonempty if the check itself threw
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  double total_seconds = 0.0;

  bool all_passed() const;
  nlohmann::json to_json() const;
  void print(std::ostream& os, bool verbose = true) const;
};

struct VerifyOptions {
  std::string only;  // substring filter on check names; empty = all
  int threads = 0;   // 0 = WORKBENCH_THREADS env or hardware concurrency
  SolveConfig solve;
};

// Names, in execution order:
//   harmonic-oscillator, susy-pairing, isochronous-spacing,
//   quantization-constraint, offdiagonal-vanishing, perfect-square-identity,
//   intertwining-residual, isotonic-matching, eigensolver-certificates.
// Certificates run last and audit every eigenpair the other checks produced;
// timing values vary between runs, everything else is deterministic.
VerificationReport run_verification(const VerifyOptions& opts = {});

std::vector<std::string> verification_check_names();

}  // namespace susyqm
