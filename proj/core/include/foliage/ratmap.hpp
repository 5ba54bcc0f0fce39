#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foliage/linalg.hpp"
#include "foliage/poly.hpp"

namespace foliage {

/// f~ = (F_0, ..., F_m): m+1 homogeneous degree-nu polynomials in n+1 variables.
struct RationalMap {
  std::size_t n = 0;
  std::size_t m = 0;
  unsigned nu = 0;
  std::vector<Poly> comps;
};

/// Builds a map from its components, inferring n, m and nu. Does not validate.
RationalMap make_rational_map(std::vector<Poly> comps);

/// Empty when all invariants hold; otherwise the first violated one.
std::optional<std::string> validation_error(const RationalMap& f);
bool validate(const RationalMap& f);

/// f~(p). Throws std::invalid_argument on a length mismatch.
std::vector<Rational> evaluate(const RationalMap& f, const Point& p);

/// Every component vanishes at p. Throws std::invalid_argument when p == 0.
bool is_indeterminacy_point(const RationalMap& f, const Point& p);

/// (m+1) x (n+1) matrix of partials at p.
Matrix jacobian_at(const RationalMap& f, const Point& p);

/// dF_0(p) ^ ... ^ dF_m(p) != 0, i.e. the Jacobian has rank m+1. Throws
/// std::invalid_argument unless p is an indeterminacy point.
bool is_generic_at(const RationalMap& f, const Point& p);

/// Projective equality of two nonzero vectors.
bool projectively_equal(const Point& a, const Point& b);

struct WitnessReport {
  std::size_t count = 0;
  /// nu^(m+1); meaningful when n == m+1.
  std::size_t bezout_bound = 0;
  bool all_generic = true;
  /// Witness count meets the Bezout bound with every point simple.
  bool complete = false;
  /// "complete by Bezout" or "partial witnesses: k of B witnessed".
  std::string status;
};

/// Verifies each point is an indeterminacy point, generic and projectively
/// distinct from the others. Throws std::invalid_argument on a duplicate, a
/// non-witness or n != m+1.
WitnessReport indeterminacy_witness_check(const RationalMap& f, const std::vector<Point>& points);

/// For maps of the form F_{i-1} = x_i^nu - c_i x_0^nu, i = 1..n (n == m+1):
/// all indeterminacy points with rational coordinates, in closed form.
/// Empty optional when f is not of that shape.
std::optional<std::vector<Point>> binomial_family_witnesses(const RationalMap& f);

/// Rank of the affine differential of f in the source chart x_chart = 1 is at
/// most m-1. Throws std::invalid_argument when f~(p) == 0 or p_chart == 0.
bool is_critical_point(const RationalMap& f, const Point& p, std::size_t chart);

/// f~(p) and q are proportional nonzero vectors. Throws when f~(p) == 0.
bool fiber_membership(const RationalMap& f, const Point& p, const Point& q);

}  // namespace foliage
