#pragma once

#include <string>
#include <vector>

#include "ecfp/experiment.hpp"

namespace ecfp {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

// Invariant suite over a parsed configuration: weight-matrix properties and
// mixing, count-distribution agreement with exhaustive enumeration at small n,
// the exact-potential identity on a shrunk game, partition validity, and the
// tracking bound on a short distributed run.
ValidationReport validate_config(const ExperimentConfig& config);

}  // namespace ecfp
