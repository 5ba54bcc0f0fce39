#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "foliage/json_io.hpp"
#include "foliage/text.hpp"
#include "foliage_app/scenario.hpp"
#include "foliage_app/suites.hpp"

using namespace foliage;
using namespace foliage::app;

namespace {

constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool exact = false;
  std::string prob;
  std::optional<std::uint64_t> seed;
  std::string json_out;
  bool timing = false;
};

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) {
    return *c.seed;
  }
  if (const char* env = std::getenv("FOLIAGE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) {
        return v;
      }
    } catch (const std::exception&) {
    }
    throw InputError(std::string("FOLIAGE_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

CheckMode resolve_mode(const Common& c) {
  const std::uint64_t seed = resolve_seed(c);
  if (c.prob.empty() || c.exact) {
    CheckMode m = CheckMode::exact();
    m.seed = seed;
    return m;
  }
  const auto comma = c.prob.find(',');
  try {
    const std::uint64_t prime = std::stoull(c.prob.substr(0, comma));
    const unsigned trials = comma == std::string::npos ? 2u : static_cast<unsigned>(std::stoul(c.prob.substr(comma + 1)));
    if (trials == 0) {
      throw InputError("--prob needs at least one trial");
    }
    return CheckMode::prob(prime, trials, seed);
  } catch (const std::logic_error&) {
    throw InputError("--prob expects <prime>,<trials>, got \"" + c.prob + "\"");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_document(const std::string& path) {
  json doc;
  try {
    doc = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("format", 0) != kFormatVersion) {
    throw InputError(path + ": missing or unsupported \"format\" (expected " + std::to_string(kFormatVersion) + ")");
  }
  return doc;
}

void emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) {
    throw InputError("cannot write " + out);
  }
  f << text;
}

int finish(const Report& r, const Common& c) {
  if (!c.json_out.empty()) {
    emit(report_to_json(r, c.timing), c.json_out);
  }
  if (c.json_out != "-") {
    std::cout << report_to_text(r);
  }
  return exit_code(r);
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw InputError("malformed point \"" + text + "\": " + e.what());
    }
  }
  if (p.empty()) {
    throw InputError("empty point");
  }
  return p;
}

// "base;dir;dir", each a comma-separated point.
AffinePlane parse_plane(const std::string& text) {
  AffinePlane plane;
  std::stringstream ss(text);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ';')) {
    if (first) {
      plane.base = parse_point(item);
      first = false;
    } else {
      plane.directions.push_back(parse_point(item));
    }
  }
  if (first || plane.directions.empty()) {
    throw InputError("plane needs a base point and at least one direction");
  }
  return plane;
}

PForm load_form(const std::string& arg, std::size_t nvars) {
  std::ifstream probe(arg);
  if (probe) {
    const std::string text = slurp(arg);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      return form_from_document(read_document(arg));
    }
    return parse_form(text, nvars);
  }
  return parse_form(arg, nvars);
}

int cmd_parse(const std::string& kind, const std::string& input, std::size_t nvars, const Common& c) {
  std::ifstream probe(input);
  const std::string text = probe ? slurp(input) : input;
  json out = {{"format", kFormatVersion}, {"kind", kind}};
  if (kind == "poly") {
    const Poly p = parse_poly(text, nvars);
    out["canonical"] = to_string(p);
    out["nvars"] = p.nvars();
  } else if (kind == "form") {
    const PForm a = parse_form(text, nvars);
    out["canonical"] = to_string(a);
    out["form"] = form_to_json(a);
  } else if (kind == "field") {
    const PVec v = parse_vector_field(text, nvars);
    out["canonical"] = to_string(v);
    out["field"] = vector_field_to_json(v);
  } else {
    const json doc = read_document(input);
    const Scenario s = load_scenario(doc);
    out["maps"] = s.maps.size();
    out["foliations"] = s.foliations.size();
    out["forms"] = s.forms.size();
    out["point_lists"] = s.point_lists.size();
    out["planes"] = s.planes.size();
    out["assertions"] = s.assertions.size();
  }
  if (!c.json_out.empty()) {
    emit(out, c.json_out);
  }
  if (c.json_out != "-") {
    std::cout << (out.contains("canonical") ? out["canonical"].get<std::string>() : out.dump()) << "\n";
  }
  return 0;
}

int cmd_pullback(const std::string& map_path, const std::string& fol_path, const Common& c) {
  const RationalMap f = map_from_json(read_document(map_path));
  const Foliation1D g = foliation_1d_from_json(read_document(fol_path));
  const CheckMode mode = resolve_mode(c);
  const FoliationQ q = pullback_foliation(f, g);
  const long predicted = predicted_pullback_degree(f.nu, g.d, f.m);
  const bool radial = radial_check(q.eta, mode);
  const bool euler = euler_relation_check(q.eta, mode);
  const bool integrable = is_integrable(q.eta, mode);
  json out = foliation_to_json(q);
  out["format"] = kFormatVersion;
  out["metadata"] = {{"degree", q.theta},
                     {"predicted_degree", predicted},
                     {"prediction_formula", "(d+m)nu-m"},
                     {"degree_matches", static_cast<long>(q.theta) == predicted},
                     {"removed_degree", q.removed_degree},
                     {"mode", mode.name()},
                     {"seed", mode.seed},
                     {"checks", {{"radial", radial}, {"euler", euler}, {"integrable", integrable}}}};
  emit(out, c.json_out);
  return radial && euler && integrable ? 0 : 1;
}

int cmd_analyze(const std::string& form_arg, const std::string& point_text, std::optional<unsigned> conic_degree,
                const std::string& plane_text, const std::vector<std::string>& expects, const Common& c) {
  const Point p = parse_point(point_text);
  const PForm a = load_form(form_arg, p.size());
  if (a.nvars() != p.size()) {
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, form has " +
                     std::to_string(a.nvars()) + " variables");
  }
  AnalyzeOptions opts;
  opts.conic_degree = conic_degree;
  if (!plane_text.empty()) {
    opts.plane = parse_plane(plane_text);
  }
  const PointReport r = analyze_point(a, p, opts);
  json out = point_report_to_json(r);
  out["format"] = kFormatVersion;
  bool matched = true;
  json checked = json::object();
  for (const std::string& e : expects) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) {
      throw InputError("--expect wants key=true|false, got \"" + e + "\"");
    }
    const std::string key = e.substr(0, eq);
    const std::string val = e.substr(eq + 1);
    if (val != "true" && val != "false") {
      throw InputError("--expect value must be true or false, got \"" + val + "\"");
    }
    bool actual = false;
    if (key == "singular") {
      actual = r.singular;
    } else if (key == "kupka") {
      actual = r.kupka;
    } else if (key == "nilpotent_rot") {
      actual = r.nilpotent_rot.value_or(false);
    } else if (key == "conic_ngk") {
      actual = r.conic_ngk.has_value();
    } else {
      throw InputError("unknown --expect key \"" + key + "\" (singular, kupka, nilpotent_rot, conic_ngk)");
    }
    const bool ok = actual == (val == "true");
    checked[key] = {{"expected", val == "true"}, {"actual", actual}, {"matched", ok}};
    matched = matched && ok;
  }
  if (!expects.empty()) {
    out["expectations"] = checked;
  }
  emit(out, c.json_out);
  return matched ? 0 : 1;
}

int cmd_hypotheses(const std::string& path, const Common& c) {
  Scenario s;
  try {
    s = load_scenario(read_document(path));
  } catch (const ScenarioError& e) {
    throw InputError(path + ": " + e.what());
  }
  return finish(run_scenario(s, resolve_mode(c)), c);
}

int cmd_verify(const std::string& suite, const Common& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown suite \"" + suite + "\"");
  }
  return finish(run_suite(suite, resolve_mode(c)), c);
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--exact", c.exact, "Exact polynomial identities (default)");
  cmd->add_option("--prob", c.prob, "Probabilistic identity tests: <prime>,<trials>");
  cmd->add_option("--seed", c.seed, "Random seed (falls back to FOLIAGE_SEED)");
  cmd->add_option("--json", c.json_out, "Write the JSON report to this file (- for stdout)");
  cmd->add_flag("--timing", c.timing, "Include per-assertion wall-clock time in the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foliage: exterior calculus and singular foliations on projective space"};
  app.require_subcommand(1);
  Common common;

  std::string kind = "poly";
  std::string input;
  std::size_t nvars = 0;
  auto* parse = app.add_subcommand("parse", "Parse and print canonically");
  parse->add_option("--kind", kind, "poly, form, field or scenario")
      ->check(CLI::IsMember({"poly", "form", "field", "scenario"}));
  parse->add_option("--nvars", nvars, "Number of variables (inferred for polynomials when omitted)");
  parse->add_option("input", input, "Text or file")->required();
  add_common(parse, common);

  std::string map_path;
  std::string fol_path;
  auto* pullback = app.add_subcommand("pullback", "Pull a foliation of P^m back by a rational map");
  pullback->add_option("map", map_path, "Map JSON")->required();
  pullback->add_option("foliation", fol_path, "Foliation JSON")->required();
  add_common(pullback, common);

  std::string form_arg;
  std::string point_text;
  std::optional<unsigned> conic_degree;
  std::string plane_text;
  std::vector<std::string> expects;
  auto* analyze = app.add_subcommand("analyze", "Local analysis of a form at a point");
  analyze->add_option("form", form_arg, "Form JSON file, form text file, or form text")->required();
  analyze->add_option("--point", point_text, "Comma-separated rational coordinates")->required();
  analyze->add_option("--conic-degree", conic_degree, "Expected conic degree d");
  analyze->add_option("--plane", plane_text, "Affine plane: base;dir;dir (points comma-separated)");
  analyze->add_option("--expect", expects, "key=true|false for singular, kupka, nilpotent_rot, conic_ngk");
  add_common(analyze, common);

  std::string scenario_path;
  auto* hypotheses = app.add_subcommand("hypotheses", "Check the hypotheses of a scenario");
  hypotheses->add_option("scenario", scenario_path, "Scenario JSON")->required();
  add_common(hypotheses, common);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a built-in verification suite");
  verify->add_option("suite", suite, "identities, degrees, kupka, counts or all")->required();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*parse) {
      return cmd_parse(kind, input, nvars, common);
    }
    if (*pullback) {
      return cmd_pullback(map_path, fol_path, common);
    }
    if (*analyze) {
      return cmd_analyze(form_arg, point_text, conic_degree, plane_text, expects, common);
    }
    if (*hypotheses) {
      return cmd_hypotheses(scenario_path, common);
    }
    return cmd_verify(suite, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.detail() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
