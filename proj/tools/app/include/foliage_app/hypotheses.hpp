#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliage/singular.hpp"
#include "foliage_app/report.hpp"

namespace foliage::app {

/// Conic NGK singularity of degree d at every indeterminacy witness, checked
/// in the chart of the first nonzero coordinate. Normal types are pushed to
/// the target by the inverse differential and must agree across witnesses
/// (and with i_R i_X dV of `g` when given) up to a nonzero scalar.
AssertionResult check_conic_at_witnesses(const std::string& name, const RationalMap& f, const PForm& eta,
                                         const std::vector<Point>& witnesses, unsigned d,
                                         const std::optional<Foliation1D>& g);

/// Kupka points along the fiber over `target`.
AssertionResult check_kupka_fibers(const std::string& name, const std::string& check, const RationalMap& f,
                                   const PForm& eta, const Point& target, const std::vector<Point>& fibers);

/// Hyperbolicity of the transversal type at a Kupka point (homogeneous coordinates).
AssertionResult check_transversal_type(const std::string& name, const std::string& check, const PForm& eta,
                                       const Point& p);

/// Conic singularity of the restriction to a (q+2)-plane at every witness.
/// Without a plane, the first coordinate plane of the chart whose restriction
/// has a nonzero slice of degree d+1 is used.
AssertionResult check_conic_on_planes(const std::string& name, const PForm& eta, const std::vector<Point>& witnesses,
                                      unsigned d, const std::optional<AffinePlane>& plane);

/// Membership in the generic class cannot be decided pointwise.
AssertionResult check_not_certifiable(const std::string& name, const std::string& check);

/// b == c a for some nonzero rational c.
bool proportional(const PForm& a, const PForm& b);

}  // namespace foliage::app
