// The project's acceptance checklist: twelve end-to-end criteria spanning
// curve counts, census coefficients, catalog identities, path feasibility,
// fan fixtures and the contribution report, each evaluated exactly.

#pragma once

#include <string>
#include <vector>

namespace tropenum {

struct CriterionResult {
  int number;
  std::string title;
  bool passed;
  // True when the failure reproduces a known, analysed mismatch against a
  // published reference value (recorded in the project notes); such results
  // are reported red but expected.
  bool documented_discrepancy{false};
  std::string detail;  // what differed, empty on a clean pass
};

// Runs all twelve criteria in order. Never throws; unexpected exceptions
// are converted into failed results with the message in `detail`.
std::vector<CriterionResult> run_acceptance_criteria();

}  // namespace tropenum
