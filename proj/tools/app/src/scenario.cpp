#include "foliage_app/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "foliage/text.hpp"
#include "foliage_app/hypotheses.hpp"

namespace foliage::app {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks = {
      "P1",       "P2",       "P3",        "Pt1",        "Pt2",        "Pt3",        "Pt4",       "degree",
      "radial",   "euler",    "integrable", "decomposable", "witnesses", "sing_count", "kupka",     "conic"};
  return checks;
}

PForm form_from_document(const json& doc) {
  if (doc.is_string()) {
    return parse_form(doc.get<std::string>());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("expected a form document");
  }
  if (doc.contains("comps")) {
    return form_from_json(doc);
  }
  if (doc.contains("eta")) {
    return form_from_document(doc.at("eta"));
  }
  if (doc.contains("foliation")) {
    return form_from_document(doc.at("foliation"));
  }
  if (doc.contains("form")) {
    return form_from_document(doc.at("form"));
  }
  throw std::invalid_argument("document holds no form (expected \"comps\", \"eta\", \"foliation\" or \"form\")");
}

namespace {

template <class T>
const T& lookup(const std::map<std::string, T>& table, const json& a, const char* key, const char* what) {
  if (!a.contains(key) || !a.at(key).is_string()) {
    throw ScenarioError("assertion \"" + a.value("name", std::string("?")) + "\" needs a \"" + key + "\" field naming a " +
                        what);
  }
  const std::string ref = a.at(key).get<std::string>();
  auto it = table.find(ref);
  if (it == table.end()) {
    throw ScenarioError("assertion \"" + a.value("name", std::string("?")) + "\": unknown " + what + " \"" + ref + "\"");
  }
  return it->second;
}

template <class T>
const T* optional_lookup(const std::map<std::string, T>& table, const json& a, const char* key, const char* what) {
  if (!a.contains(key)) {
    return nullptr;
  }
  return &lookup(table, a, key, what);
}

unsigned unsigned_field(const json& a, const char* key) {
  if (!a.contains(key) || !a.at(key).is_number_integer() || a.at(key).get<long long>() < 0) {
    throw ScenarioError("assertion \"" + a.value("name", std::string("?")) + "\" needs a non-negative integer \"" +
                        key + "\"");
  }
  return a.at(key).get<unsigned>();
}

Point point_field(const json& a, const char* key) {
  if (!a.contains(key)) {
    throw ScenarioError("assertion \"" + a.value("name", std::string("?")) + "\" needs a point \"" + key + "\"");
  }
  return point_from_json(a.at(key));
}

const std::vector<Point> kNoPoints;

// Resolves every reference an assertion makes, without running it.
void resolve(const Scenario& s, const json& a) {
  const std::string check = a.at("check").get<std::string>();
  auto need_form = [&] { lookup(s.forms, a, "form", "form"); };
  auto need_map = [&] { lookup(s.maps, a, "map", "map"); };
  if (check == "P1") {
    need_map();
    need_form();
    lookup(s.point_lists, a, "witnesses", "point list");
    unsigned_field(a, "d");
    optional_lookup(s.foliations, a, "foliation", "foliation");
  } else if (check == "P2" || check == "Pt3") {
    need_map();
    need_form();
    optional_lookup(s.point_lists, a, "fibers", "point list");
    point_field(a, "target");
  } else if (check == "P3" || check == "Pt4") {
    need_form();
    if (!a.contains("point")) {
      lookup(s.point_lists, a, "fibers", "point list");
    } else {
      point_field(a, "point");
    }
  } else if (check == "Pt1") {
    need_form();
    lookup(s.point_lists, a, "witnesses", "point list");
    unsigned_field(a, "d");
    optional_lookup(s.planes, a, "plane", "plane");
  } else if (check == "degree") {
    need_form();
    unsigned_field(a, "expect");
  } else if (check == "radial" || check == "euler" || check == "integrable" || check == "decomposable") {
    need_form();
  } else if (check == "witnesses") {
    need_map();
    lookup(s.point_lists, a, "witnesses", "point list");
  } else if (check == "sing_count") {
    lookup(s.foliations, a, "foliation", "foliation");
  } else if (check == "kupka") {
    need_form();
    point_field(a, "point");
  } else if (check == "conic") {
    need_form();
    point_field(a, "point");
    unsigned_field(a, "d");
  }
}

AffinePlane plane_from_json(const json& j) {
  AffinePlane p;
  p.base = point_from_json(j.at("base"));
  for (const json& d : j.at("directions")) {
    p.directions.push_back(point_from_json(d));
  }
  return p;
}

std::vector<Point> points_from_json(const Scenario& s, const json& j) {
  if (j.is_object() && j.contains("binomial_witnesses")) {
    const std::string ref = j.at("binomial_witnesses").get<std::string>();
    auto it = s.maps.find(ref);
    if (it == s.maps.end()) {
      throw ScenarioError("point list generator names unknown map \"" + ref + "\"");
    }
    auto pts = binomial_family_witnesses(it->second);
    if (!pts) {
      throw ScenarioError("map \"" + ref + "\" is not a binomial family");
    }
    return *pts;
  }
  if (!j.is_array()) {
    throw ScenarioError("a point list must be an array of points");
  }
  std::vector<Point> out;
  for (const json& p : j) {
    out.push_back(point_from_json(p));
  }
  return out;
}

}  // namespace

Scenario load_scenario(const json& doc) {
  if (!doc.is_object()) {
    throw ScenarioError("a scenario must be a JSON object");
  }
  if (doc.value("format", 0) != kFormatVersion) {
    throw ScenarioError("unsupported or missing \"format\" (expected " + std::to_string(kFormatVersion) + ")");
  }
  Scenario s;
  try {
    const json maps = doc.value("maps", json::object());
    for (const auto& [name, j] : maps.items()) {
      s.maps.emplace(name, map_from_json(j));
      if (auto err = validation_error(s.maps.at(name))) {
        throw ScenarioError("map \"" + name + "\" is invalid: " + *err);
      }
    }
    const json foliations = doc.value("foliations", json::object());
    for (const auto& [name, j] : foliations.items()) {
      if (j.value("kind", std::string()) == "q") {
        s.forms.emplace(name, foliation_q_from_json(j, false).eta);
      } else {
        s.foliations.emplace(name, foliation_1d_from_json(j));
      }
    }
    const json forms = doc.value("forms", json::object());
    for (const auto& [name, j] : forms.items()) {
      if (j.is_object() && j.contains("pullback")) {
        const json& pb = j.at("pullback");
        const std::string mref = pb.at("map").get<std::string>();
        const std::string gref = pb.at("foliation").get<std::string>();
        if (!s.maps.count(mref) || !s.foliations.count(gref)) {
          throw ScenarioError("form \"" + name + "\" pulls back unknown map or foliation");
        }
        s.forms.emplace(name, pullback_foliation(s.maps.at(mref), s.foliations.at(gref)).eta);
      } else if (j.is_object() && j.contains("omega")) {
        const std::string gref = j.at("omega").get<std::string>();
        if (!s.foliations.count(gref)) {
          throw ScenarioError("form \"" + name + "\" names unknown foliation \"" + gref + "\"");
        }
        s.forms.emplace(name, omega_from_1d(s.foliations.at(gref)));
      } else {
        s.forms.emplace(name, form_from_document(j));
      }
    }
    const json point_lists = doc.value("point_lists", json::object());
    for (const auto& [name, j] : point_lists.items()) {
      s.point_lists.emplace(name, points_from_json(s, j));
    }
    const json planes = doc.value("planes", json::object());
    for (const auto& [name, j] : planes.items()) {
      s.planes.emplace(name, plane_from_json(j));
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(e.what());
  }
  std::vector<std::string> names;
  const json assertions = doc.value("assertions", json::array());
  for (const json& a : assertions) {
    if (!a.is_object() || !a.contains("name") || !a.at("name").is_string() || !a.contains("check") ||
        !a.at("check").is_string()) {
      throw ScenarioError("every assertion needs string \"name\" and \"check\" fields");
    }
    const std::string check = a.at("check").get<std::string>();
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), check) == known.end()) {
      throw ScenarioError("assertion \"" + a.at("name").get<std::string>() + "\": unknown check \"" + check + "\"");
    }
    const std::string name = a.at("name").get<std::string>();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ScenarioError("duplicate assertion name \"" + name + "\"");
    }
    names.push_back(name);
    resolve(s, a);
    s.assertions.push_back(a);
  }
  return s;
}

namespace {

AssertionResult boolean_result(const std::string& name, const std::string& check, bool value, bool expect,
                               const std::string& mode, const std::string& what) {
  AssertionResult r{name, check, value == expect ? Outcome::kPass : Outcome::kFail, mode, "", nullptr, 0};
  r.detail = what + (value ? " holds" : " fails") + (expect ? "" : " (failure expected)");
  return r;
}

AssertionResult run_one(const Scenario& s, const json& a, const CheckMode& mode) {
  const std::string name = a.at("name").get<std::string>();
  const std::string check = a.at("check").get<std::string>();
  // "expect" is a boolean except for the degree check, where it is the expected degree.
  const bool expect = !a.contains("expect") || !a.at("expect").is_boolean() || a.at("expect").get<bool>();
  if (check == "P1") {
    const Foliation1D* g = optional_lookup(s.foliations, a, "foliation", "foliation");
    return check_conic_at_witnesses(name, lookup(s.maps, a, "map", "map"), lookup(s.forms, a, "form", "form"),
                                    lookup(s.point_lists, a, "witnesses", "point list"), unsigned_field(a, "d"),
                                    g ? std::optional<Foliation1D>(*g) : std::nullopt);
  }
  if (check == "P2" || check == "Pt3") {
    const auto* fibers = optional_lookup(s.point_lists, a, "fibers", "point list");
    return check_kupka_fibers(name, check, lookup(s.maps, a, "map", "map"), lookup(s.forms, a, "form", "form"),
                              point_field(a, "target"), fibers ? *fibers : kNoPoints);
  }
  if (check == "P3" || check == "Pt4") {
    const Point p = a.contains("point") ? point_field(a, "point")
                                        : lookup(s.point_lists, a, "fibers", "point list").at(0);
    return check_transversal_type(name, check, lookup(s.forms, a, "form", "form"), p);
  }
  if (check == "Pt1") {
    const AffinePlane* plane = optional_lookup(s.planes, a, "plane", "plane");
    return check_conic_on_planes(name, lookup(s.forms, a, "form", "form"),
                                 lookup(s.point_lists, a, "witnesses", "point list"), unsigned_field(a, "d"),
                                 plane ? std::optional<AffinePlane>(*plane) : std::nullopt);
  }
  if (check == "Pt2") {
    return check_not_certifiable(name, check);
  }
  const PForm* form = optional_lookup(s.forms, a, "form", "form");
  if (check == "degree") {
    const unsigned want = unsigned_field(a, "expect");
    const unsigned got = degree_of(*form);
    AssertionResult r{name, check, got == want ? Outcome::kPass : Outcome::kFail, "exact", "", nullptr, 0};
    r.detail = "degree " + std::to_string(got) + ", expected " + std::to_string(want);
    if (got != want) {
      r.counterexample = got;
    }
    return r;
  }
  if (check == "radial") {
    return boolean_result(name, check, radial_check(*form, mode), expect, mode.name(), "i_R eta == 0");
  }
  if (check == "euler") {
    return boolean_result(name, check, euler_relation_check(*form, mode), expect, mode.name(),
                          "i_R d eta == (k+q) eta");
  }
  if (check == "integrable") {
    return boolean_result(name, check, is_integrable(*form, mode), expect, mode.name(), "Plucker and Frobenius");
  }
  if (check == "decomposable") {
    return boolean_result(name, check, is_decomposable_everywhere(*form, mode), expect, mode.name(),
                          "Plucker relations");
  }
  if (check == "witnesses") {
    const RationalMap& f = lookup(s.maps, a, "map", "map");
    const WitnessReport w = indeterminacy_witness_check(f, lookup(s.point_lists, a, "witnesses", "point list"));
    const bool want_complete = a.value("expect_complete", true);
    AssertionResult r{name, check, w.complete == want_complete ? Outcome::kPass : Outcome::kFail, "exact", w.status,
                      nullptr, 0};
    return r;
  }
  if (check == "sing_count") {
    const Foliation1D& g = lookup(s.foliations, a, "foliation", "foliation");
    const unsigned want = a.contains("expect") ? unsigned_field(a, "expect") : g.d * g.d + g.d + 1;
    AssertionResult r{name, check, Outcome::kPass, "exact", "", nullptr, 0};
    try {
      const unsigned got = sing_count_p2(g, 2, a.value("seed", kDefaultSeed));
      r.outcome = got == want ? Outcome::kPass : Outcome::kFail;
      r.detail = std::to_string(got) + " singularities with multiplicity, expected " + std::to_string(want);
    } catch (const PositiveDimensional& e) {
      r.outcome = Outcome::kFail;
      r.detail = e.what();
    }
    return r;
  }
  if (check == "kupka") {
    const Point p = point_field(a, "point");
    return boolean_result(name, check, kupka_at(*form, p), expect, "exact", "Kupka at " + to_string(p));
  }
  if (check == "conic") {
    const Point p = point_field(a, "point");
    const ConicCheck c = is_conic_ngk_at(*form, p, unsigned_field(a, "d"));
    AssertionResult r = boolean_result(name, check, c.record.has_value(), expect, c.record ? c.record->mode : "exact",
                                       "conic NGK at " + to_string(p));
    if (!c.record) {
      r.detail += ": " + c.failure;
    }
    return r;
  }
  throw ScenarioError("unknown check \"" + check + "\"");
}

}  // namespace

Report run_scenario(const Scenario& s, const CheckMode& mode) {
  Report report;
  report.command = "hypotheses";
  report.seed = mode.seed;
  // Assertions share only const inputs; each runs on its own thread.
  std::vector<std::future<AssertionResult>> pending;
  pending.reserve(s.assertions.size());
  for (const json& a : s.assertions) {
    pending.push_back(std::async(std::launch::async, [&s, &a, &mode] {
      const auto start = std::chrono::steady_clock::now();
      AssertionResult r;
      try {
        r = run_one(s, a, mode);
      } catch (const ScenarioError&) {
        throw;
      } catch (const std::exception& e) {
        r = {a.at("name").get<std::string>(), a.at("check").get<std::string>(), Outcome::kFail, "exact",
             std::string("error: ") + e.what(), nullptr, 0};
      }
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    }));
  }
  for (auto& f : pending) {
    report.results.push_back(f.get());
  }
  return report;
}

}  // namespace foliage::app
