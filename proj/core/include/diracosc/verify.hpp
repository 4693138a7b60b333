#pragma once

#include <string>
#include <vector>

namespace diracosc {

/// One verification check: a measured quantity against its pinned threshold.
/// `direction` is "<=" when measured must stay below threshold, ">=" when it
/// must stay above (detuning sensitivity checks).
struct Check {
  std::string name;
  std::string paper_ref;
  double measured = 0.0;
  double threshold = 0.0;
  std::string direction = "<=";
  bool pass = false;
};

/// Known suites: residuals, spectra, algebra, xpct, so21, all.
bool is_known_suite(const std::string& suite);

/// Runs a suite and returns its checks sorted by name (deterministic order).
std::vector<Check> run_suite(const std::string& suite);

}  // namespace diracosc
