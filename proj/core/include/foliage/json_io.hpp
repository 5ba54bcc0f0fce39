#pragma once

#include <nlohmann/json.hpp>

#include "foliage/foliation.hpp"
#include "foliage/ratmap.hpp"
#include "foliage/singular.hpp"

namespace foliage {

using json = nlohmann::json;

/// Version tag written into every JSON document.
inline constexpr int kFormatVersion = 1;

/// Rationals are written as "p" or "p/q" strings; integers are accepted on input.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json matrix_to_json(const Matrix& m);

/// { "nvars", "formdeg", "comps": [ { "idx": [...], "poly": "<text>" } ] }
json form_to_json(const PForm& a);
PForm form_from_json(const json& j);

/// { "nvars", "comps": ["<poly>", ...] }
json vector_field_to_json(const PVec& v);
PVec vector_field_from_json(const json& j);

/// { "n", "m", "nu", "F": ["<poly>", ...] }
json map_to_json(const RationalMap& f);
RationalMap map_from_json(const json& j);

/// { "kind": "1d", "m", "d", "X": [...] }
json foliation_to_json(const Foliation1D& g);
Foliation1D foliation_1d_from_json(const json& j);
/// { "kind": "q", "n", "q", "eta": <form> }
json foliation_to_json(const FoliationQ& f);
FoliationQ foliation_q_from_json(const json& j, bool check_integrable = true);

json conic_to_json(const ConicRecord& c);
json point_report_to_json(const PointReport& r);

}  // namespace foliage
