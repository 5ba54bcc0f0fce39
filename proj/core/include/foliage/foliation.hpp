#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foliage/exterior.hpp"
#include "foliage/modpoly.hpp"
#include "foliage/ratmap.hpp"

namespace foliage {

inline constexpr std::uint64_t kDefaultSeed = 20240611ULL;

/// How polynomial identities are decided: exactly over Q, or by evaluation
/// at random points of F_p^N (one-sided error, `trials` points).
struct CheckMode {
  bool probabilistic = false;
  std::uint64_t prime = kDefaultPrime;
  unsigned trials = 2;
  std::uint64_t seed = kDefaultSeed;

  static CheckMode exact() { return {}; }
  static CheckMode prob(std::uint64_t prime, unsigned trials, std::uint64_t seed = kDefaultSeed) {
    return {true, prime, trials, seed};
  }
  const char* name() const { return probabilistic ? "probabilistic" : "exact"; }
};

/// Foliation of P^m by curves: X with homogeneous components of degree d.
struct Foliation1D {
  std::size_t m = 0;
  unsigned d = 0;
  PVec X{1};
};

/// Checks homogeneity and that X is not a multiple of the radial field.
Foliation1D make_foliation_1d(PVec X);

/// Codimension-q foliation of P^n by its homogeneous q-form.
struct FoliationQ {
  std::size_t n = 0;
  std::size_t q = 0;
  PForm eta{1, 0};
  unsigned theta = 0;
  /// Common factor divided out of the pulled-back coefficients (1 if none).
  Poly removed_factor{1};
  unsigned removed_degree = 0;
};

/// Checks i_R eta == 0, common coefficient degree >= 1, optionally integrability.
FoliationQ make_foliation_q(PForm eta, bool check_integrable = true);

/// Omega = i_R i_X dV, an (m-1)-form on m+1 variables with coefficients of degree d+1.
PForm omega_from_1d(const Foliation1D& g);

/// f~* Omega with the gcd of its coefficients removed. Throws on an invalid
/// map, an arity mismatch or a vanishing pull-back.
FoliationQ pullback_foliation(const RationalMap& f, const Foliation1D& g);

/// The same form computed from the expanded sum
///   sum_{a<b} (-1)^(a+b) (F_a (P_b o f~) - F_b (P_a o f~)) dF_0 ^ .. ^dF_a^ .. ^dF_b^ .. ^ dF_m,
/// without dividing out common factors.
PForm pullback_form_by_expansion(const RationalMap& f, const Foliation1D& g);

/// Common coefficient degree minus one. Throws on an inhomogeneous or zero form.
unsigned degree_of(const PForm& a);
inline unsigned degree_of(const FoliationQ& f) { return f.theta; }

/// (d+m) nu - m.
inline long predicted_pullback_degree(unsigned nu, unsigned d, std::size_t m) {
  return static_cast<long>((d + m) * nu) - static_cast<long>(m);
}

/// i_R a == 0.
bool radial_check(const PForm& a, const CheckMode& mode = {});
/// i_R da == (k+q) a for coefficient degree k and form degree q.
/// Throws std::invalid_argument on inhomogeneous input.
bool euler_relation_check(const PForm& a, const CheckMode& mode = {});

/// (i_J a) ^ a == 0 for every constant (q-1)-multivector J.
bool is_decomposable_everywhere(const PForm& a, const CheckMode& mode = {});
/// Decomposability plus (i_J a) ^ da == 0 for every J.
bool is_integrable(const PForm& a, const CheckMode& mode = {});

/// Basis of {v : i_v a(p) = 0}. Throws std::domain_error when a(p) == 0.
std::vector<std::vector<Rational>> kernel_at(const PForm& a, const Point& p);

}  // namespace foliage
