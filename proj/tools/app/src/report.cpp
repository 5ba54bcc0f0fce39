#include "foliage_app/report.hpp"

#include <algorithm>
#include <sstream>

namespace foliage::app {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

int exit_code(const Report& r) {
  bool inconclusive = false;
  for (const auto& a : r.results) {
    if (a.outcome == Outcome::kFail) {
      return 1;
    }
    inconclusive = inconclusive || a.outcome == Outcome::kInconclusive;
  }
  return inconclusive ? 3 : 0;
}

namespace {

std::vector<const AssertionResult*> sorted(const Report& r) {
  std::vector<const AssertionResult*> out;
  for (const auto& a : r.results) {
    out.push_back(&a);
  }
  std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return out;
}

}  // namespace

json report_to_json(const Report& r, bool with_timing) {
  json assertions = json::array();
  int counts[3] = {0, 0, 0};
  for (const AssertionResult* a : sorted(r)) {
    json e = {{"name", a->name},
              {"check", a->check},
              {"outcome", outcome_name(a->outcome)},
              {"mode", a->mode},
              {"detail", a->detail},
              {"counterexample", a->counterexample}};
    if (with_timing) {
      e["millis"] = a->millis;
    }
    assertions.push_back(std::move(e));
    ++counts[static_cast<int>(a->outcome)];
  }
  return {{"format", kFormatVersion},
          {"command", r.command},
          {"seed", r.seed},
          {"assertions", assertions},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}}},
          {"exit_code", exit_code(r)}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  int counts[3] = {0, 0, 0};
  for (const AssertionResult* a : sorted(r)) {
    os << "[" << outcome_name(a->outcome) << "] " << a->name << " (" << a->mode << ")";
    if (!a->detail.empty()) {
      os << ": " << a->detail;
    }
    os << "\n";
    ++counts[static_cast<int>(a->outcome)];
  }
  os << "seed " << r.seed << "; " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
     << " inconclusive\n";
  return os.str();
}

}  // namespace foliage::app
