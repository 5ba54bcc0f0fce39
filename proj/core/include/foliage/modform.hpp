#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "foliage/exterior.hpp"
#include "foliage/modpoly.hpp"

namespace foliage {

/// Constant-coefficient q-form over F_p: the value of a polynomial form at one point.
struct ModForm {
  std::size_t nvars = 0;
  std::size_t degree = 0;
  std::map<FormIndex, std::uint64_t> comps;

  bool is_zero() const { return comps.empty(); }
  friend bool operator==(const ModForm&, const ModForm&) = default;
};

/// Value of `a` at `point` modulo the field prime. Throws std::domain_error
/// when a coefficient denominator vanishes mod p.
ModForm evaluate_mod(const PForm& a, std::span<const std::uint64_t> point, const ModField& field);

ModForm wedge_mod(const ModForm& a, const ModForm& b, const ModField& field);
ModForm interior_mod(std::span<const std::uint64_t> v, const ModForm& a, const ModField& field);
ModForm scale_mod(std::uint64_t c, const ModForm& a, const ModField& field);
ModForm sub_mod(const ModForm& a, const ModForm& b, const ModField& field);

/// Contraction with e_{j1} ^ ... ^ e_{jk}, same order as contract_multivector.
ModForm contract_multivector_mod(const FormIndex& j, const ModForm& a, const ModField& field);

}  // namespace foliage
