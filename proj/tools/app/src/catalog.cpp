#include "foliage_app/catalog.hpp"

#include <stdexcept>
#include <string>

#include "foliage/text.hpp"

namespace foliage::app {

RationalMap binomial_map(unsigned nu) {
  const std::string e = std::to_string(nu);
  std::vector<Poly> comps;
  for (int i = 1; i <= 3; ++i) {
    comps.push_back(parse_poly("x" + std::to_string(i) + "^" + e + " - x0^" + e, 4));
  }
  return make_rational_map(std::move(comps));
}

Foliation1D hyperbolic_quadratic_foliation() {
  return make_foliation_1d(parse_vector_field(
      "(-2*x0^2 - x0*x1 + x0*x2 - x1^2 - x1*x2)*d/dx0"
      " + (-x0^2 - x0*x1 + x0*x2 - 2*x1^2 + x1*x2)*d/dx1"
      " + (-2*x0^2 + x0*x2 - x1^2 - 2*x1*x2)*d/dx2",
      3));
}

Foliation1D cubic_foliation() {
  return make_foliation_1d(parse_vector_field(
      "(x1^3 - x0*x2^2)*d/dx0 + (x0^2*x1 + x2^3)*d/dx1 + (x0^3 + x0*x1*x2 - x1^2*x2)*d/dx2", 3));
}

Foliation1D reference_foliation(unsigned d) {
  switch (d) {
    case 2:
      return hyperbolic_quadratic_foliation();
    case 3:
      return cubic_foliation();
    default:
      throw std::invalid_argument("no reference foliation of degree " + std::to_string(d));
  }
}

Foliation1D diagonal_linear_foliation() {
  return make_foliation_1d(parse_vector_field("(x0)*d/dx0 + (2*x1)*d/dx1 + (3*x2)*d/dx2", 3));
}

PForm symplectic_form() { return parse_form("dx0^dx1 + dx2^dx3", 4); }

}  // namespace foliage::app
