#pragma once

#include <string>
#include <vector>

#include "lpo/seq.hpp"

namespace lpo {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<SuiteCheck> checks;
  void add(std::string name, bool ok, std::string detail = "");
};

const std::vector<std::string>& verify_suite_names();  // excludes "all"

/// Runs one verification suite at length ell over the given pairs (the
/// caller searches when it has none). Suites: psd, dragomir, main0, main1,
/// projector, vanishing, bounds.
SuiteReport run_verify_suite(const std::string& suite, long long ell,
                             const std::vector<LegendrePairRecord>& pairs, int jobs);

}  // namespace lpo
