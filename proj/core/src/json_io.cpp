#include "foliage/json_io.hpp"

#include <stdexcept>

#include "foliage/text.hpp"

namespace foliage {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Poly> polys_from(const json& arr, std::size_t nvars, const char* key) {
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an array of polynomial strings");
  }
  std::vector<Poly> out;
  for (const json& e : arr) {
    if (!e.is_string()) {
      throw std::invalid_argument(std::string("entries of \"") + key + "\" must be strings");
    }
    out.push_back(parse_poly(e.get<std::string>(), nvars));
  }
  return out;
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw std::invalid_argument("expected a rational as an integer or a \"p/q\" string");
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (const Rational& x : p) {
    out.push_back(rational_to_json(x));
  }
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("a point must be a non-empty array of rationals");
  }
  Point out;
  for (const json& e : j) {
    out.push_back(rational_from_json(e));
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out.push_back(point_to_json(m.row(r)));
  }
  return out;
}

json form_to_json(const PForm& a) {
  json comps = json::array();
  for (const auto& [idx, p] : a.components()) {
    comps.push_back({{"idx", idx}, {"poly", to_string(p)}});
  }
  return {{"nvars", a.nvars()}, {"formdeg", a.degree()}, {"comps", comps}};
}

PForm form_from_json(const json& j) {
  if (j.is_string()) {
    return parse_form(j.get<std::string>());
  }
  const std::size_t n = count_field(j, "nvars");
  const std::size_t q = count_field(j, "formdeg");
  PForm out(n, q);
  for (const json& c : field(j, "comps")) {
    const json& idx = field(c, "idx");
    if (!idx.is_array()) {
      throw std::invalid_argument("\"idx\" must be an array of variable indices");
    }
    FormIndex key;
    for (const json& i : idx) {
      key.push_back(i.get<std::size_t>());
    }
    const json& poly = field(c, "poly");
    if (!poly.is_string()) {
      throw std::invalid_argument("\"poly\" must be a polynomial string");
    }
    out.add_term(key, parse_poly(poly.get<std::string>(), n));
  }
  return out;
}

json vector_field_to_json(const PVec& v) {
  json comps = json::array();
  for (const Poly& p : v.comps()) {
    comps.push_back(to_string(p));
  }
  return {{"nvars", v.nvars()}, {"comps", comps}};
}

PVec vector_field_from_json(const json& j) {
  const std::size_t n = count_field(j, "nvars");
  return PVec(polys_from(field(j, "comps"), n, "comps"));
}

json map_to_json(const RationalMap& f) {
  json comps = json::array();
  for (const Poly& p : f.comps) {
    comps.push_back(to_string(p));
  }
  return {{"n", f.n}, {"m", f.m}, {"nu", f.nu}, {"F", comps}};
}

RationalMap map_from_json(const json& j) {
  RationalMap f;
  f.n = count_field(j, "n");
  f.m = count_field(j, "m");
  f.nu = static_cast<unsigned>(count_field(j, "nu"));
  f.comps = polys_from(field(j, "F"), f.n + 1, "F");
  if (f.comps.size() != f.m + 1) {
    throw std::invalid_argument("map lists " + std::to_string(f.comps.size()) + " components, expected m+1 = " +
                                std::to_string(f.m + 1));
  }
  return f;
}

json foliation_to_json(const Foliation1D& g) {
  json comps = json::array();
  for (const Poly& p : g.X.comps()) {
    comps.push_back(to_string(p));
  }
  return {{"kind", "1d"}, {"m", g.m}, {"d", g.d}, {"X", comps}};
}

Foliation1D foliation_1d_from_json(const json& j) {
  if (field(j, "kind") != "1d") {
    throw std::invalid_argument("expected a foliation of kind \"1d\"");
  }
  const std::size_t m = count_field(j, "m");
  Foliation1D g = make_foliation_1d(PVec(polys_from(field(j, "X"), m + 1, "X")));
  if (j.contains("d") && count_field(j, "d") != g.d) {
    throw std::invalid_argument("declared degree " + std::to_string(count_field(j, "d")) +
                                " differs from the degree of X (" + std::to_string(g.d) + ")");
  }
  return g;
}

json foliation_to_json(const FoliationQ& f) {
  json out = {{"kind", "q"}, {"n", f.n}, {"q", f.q}, {"theta", f.theta}, {"eta", form_to_json(f.eta)}};
  if (f.removed_degree > 0) {
    out["removed_factor"] = to_string(f.removed_factor);
  }
  out["removed_degree"] = f.removed_degree;
  return out;
}

FoliationQ foliation_q_from_json(const json& j, bool check_integrable) {
  if (field(j, "kind") != "q") {
    throw std::invalid_argument("expected a foliation of kind \"q\"");
  }
  FoliationQ f = make_foliation_q(form_from_json(field(j, "eta")), check_integrable);
  if (j.contains("n") && count_field(j, "n") != f.n) {
    throw std::invalid_argument("declared n does not match the form");
  }
  if (j.contains("q") && count_field(j, "q") != f.q) {
    throw std::invalid_argument("declared q does not match the form degree");
  }
  return f;
}

json conic_to_json(const ConicRecord& c) {
  return {{"d", c.d}, {"mode", c.mode}, {"normal_type", form_to_json(c.normal_type)}};
}

json point_report_to_json(const PointReport& r) {
  json out;
  out["point"] = point_to_json(r.point);
  out["singular"] = r.singular;
  out["kupka"] = r.kupka;
  out["rot_linear_part"] = r.rot_linear_part ? matrix_to_json(*r.rot_linear_part) : json(nullptr);
  out["nilpotent"] = r.nilpotent_rot ? json(*r.nilpotent_rot) : json(nullptr);
  out["conic_ngk"] = r.conic_ngk ? conic_to_json(*r.conic_ngk) : json(nullptr);
  out["notes"] = r.notes;
  return out;
}

}  // namespace foliage
