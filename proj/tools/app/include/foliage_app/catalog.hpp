#pragma once

#include "foliage/foliation.hpp"
#include "foliage/ratmap.hpp"

namespace foliage::app {

/// (x1^nu - x0^nu, x2^nu - x0^nu, x3^nu - x0^nu): P^3 --> P^2.
RationalMap binomial_map(unsigned nu);

/// Degree-2 foliation of P^2 with seven simple singularities, all of Kupka
/// type; at [0:0:1] its linear part in the chart x2 = 1 is [[1,-1],[1,1]].
Foliation1D hyperbolic_quadratic_foliation();

/// A degree-3 foliation of P^2 used for the degree tables.
Foliation1D cubic_foliation();

/// Degree 2 -> hyperbolic_quadratic_foliation, 3 -> cubic_foliation.
Foliation1D reference_foliation(unsigned d);

/// X = x0 d/dx0 + 2 x1 d/dx1 + 3 x2 d/dx2.
Foliation1D diagonal_linear_foliation();

/// dx0^dx1 + dx2^dx3: the standard non-decomposable 2-form.
PForm symplectic_form();

}  // namespace foliage::app
