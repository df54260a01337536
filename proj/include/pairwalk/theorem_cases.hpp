#pragma once

#include <string>
#include <vector>

#include "pairwalk/report.hpp"

namespace pairwalk {

/// Data-registered verification case bundling one of the checkable claims:
/// a fixture recipe, the pipeline kind to run, and the expected outcome.
struct TheoremCase {
  std::string id;
  std::string kind;  // "scan-pst" | "spectra-match" | "tkn-projectors" | "pgst-search"
  std::string description;
  ParamMap params;
};

struct TheoremCaseResult {
  std::string id;
  bool pass = false;
  Json evidence;
};

const std::vector<TheoremCase>& theorem_case_registry();

/// Runs a registered case; overrides replace registry parameters by key.
TheoremCaseResult run_theorem_case(const std::string& id, const ParamMap& overrides);

Json theorem_result_json(const TheoremCase& tc, const TheoremCaseResult& result);

}  // namespace pairwalk
