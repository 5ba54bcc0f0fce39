#pragma once

#include <span>
#include <vector>

#include "foliage/poly.hpp"

namespace foliage {

/// Coefficients of p viewed as a polynomial in x_var, index = power of x_var.
/// Each coefficient lives in the same ring and does not involve x_var.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);
Poly from_coefficients(std::span<const Poly> coeffs, std::size_t var);

/// lc(b)^(deg a - deg b + 1) * a  mod  b, as polynomials in x_var. Throws if b == 0.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Scales p so its grlex leading coefficient is 1; zero stays zero.
Poly make_monic(const Poly& p);

/// Greatest common divisor over Q, normalized to grlex leading coefficient 1.
/// gcd(0, 0) = 0.
///
/// Recursive content / primitive-part scheme with subresultant remainder
/// sequences in the main variable. A modular specialization check first
/// tries to certify coprimality cheaply.
Poly gcd_multivar(const Poly& a, const Poly& b);

/// gcd of a list; zero for an empty or all-zero list.
Poly gcd_all(std::span<const Poly> polys);

/// gcd of the coefficients of p with respect to x_var.
Poly content_in(const Poly& p, std::size_t var);

/// Res_{x_var}(a, b), computed by the subresultant algorithm. The result does
/// not involve x_var. Zero if either input is zero or they share a factor
/// of positive degree in x_var.
Poly resultant(const Poly& a, const Poly& b, std::size_t var);

}  // namespace foliage
