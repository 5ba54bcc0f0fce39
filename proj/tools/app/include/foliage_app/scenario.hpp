#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliage/json_io.hpp"
#include "foliage/singular.hpp"
#include "foliage_app/report.hpp"

namespace foliage::app {

/// Malformed scenario: unknown check, unresolved name, bad field.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named inputs plus the assertions to run on them.
struct Scenario {
  std::map<std::string, RationalMap> maps;
  std::map<std::string, Foliation1D> foliations;
  std::map<std::string, PForm> forms;
  std::map<std::string, std::vector<Point>> point_lists;
  std::map<std::string, AffinePlane> planes;
  std::vector<json> assertions;
};

/// Names accepted in the "check" field of an assertion.
const std::vector<std::string>& known_checks();

/// Parses and resolves every reference; throws ScenarioError.
Scenario load_scenario(const json& doc);

/// Runs every assertion. Identity checks honor `mode`; everything else is exact.
Report run_scenario(const Scenario& s, const CheckMode& mode);

/// Accepts a form JSON object, form text, a {"kind":"q"} foliation, or any
/// document with an "eta" or "foliation" member holding one of those.
PForm form_from_document(const json& doc);

}  // namespace foliage::app
