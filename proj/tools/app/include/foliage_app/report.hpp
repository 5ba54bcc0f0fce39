#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foliage/json_io.hpp"

namespace foliage::app {

enum class Outcome { kPass, kFail, kInconclusive };

const char* outcome_name(Outcome o);

struct AssertionResult {
  std::string name;
  std::string check;
  Outcome outcome = Outcome::kPass;
  /// "exact", "probabilistic" or "numerical".
  std::string mode = "exact";
  std::string detail;
  /// Smallest datum showing a failure; null otherwise.
  json counterexample;
  double millis = 0;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<AssertionResult> results;
};

/// 0 all pass, 1 any failure, 3 inconclusive without failures.
int exit_code(const Report& r);

/// Results sorted by name. Timing is included only on request, so default
/// reports are byte-identical across runs.
json report_to_json(const Report& r, bool with_timing = false);

/// One line per assertion plus a summary line.
std::string report_to_text(const Report& r);

}  // namespace foliage::app
