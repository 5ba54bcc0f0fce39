#pragma once

#include <random>

#include "foliage/exterior.hpp"

namespace foliage::app {

/// Small-integer (occasionally fractional) coefficients, up to `terms` terms of total degree <= max_degree.
Poly random_poly(std::size_t nvars, unsigned max_degree, unsigned terms, std::mt19937_64& rng);
/// Homogeneous of exactly `degree` (nonzero).
Poly random_homogeneous(std::size_t nvars, unsigned degree, unsigned terms, std::mt19937_64& rng);
/// Every component homogeneous of `degree`, not all zero.
PVec random_homogeneous_field(std::size_t nvars, unsigned degree, std::mt19937_64& rng);
PVec random_field(std::size_t nvars, unsigned max_degree, std::mt19937_64& rng);
PForm random_form(std::size_t nvars, std::size_t formdeg, unsigned max_degree, std::mt19937_64& rng);

}  // namespace foliage::app
