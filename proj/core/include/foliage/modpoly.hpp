#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "foliage/poly.hpp"

namespace foliage {

__extension__ using UInt128 = unsigned __int128;

/// 2^61 - 1, the default modulus for probabilistic identity testing.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;
/// Largest prime below 2^62.
inline constexpr std::uint64_t kPrime62 = 4611686018427387847ULL;

/// Arithmetic in Z/pZ for an odd prime p < 2^63.
class ModField {
 public:
  explicit ModField(std::uint64_t prime);

  std::uint64_t prime() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<UInt128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;
  /// Throws std::domain_error on zero.
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of an integer; never fails.
  std::uint64_t reduce(const Integer& z) const;
  /// Image of a rational. Throws std::domain_error when p divides the denominator.
  std::uint64_t reduce(const Rational& r) const;

  std::uint64_t uniform(std::mt19937_64& rng) const;

 private:
  std::uint64_t p_;
};

struct ModTerm {
  Monomial mono;
  std::uint64_t coeff;
};

/// Image of a Poly in F_p[x]. Same canonical-form rules as Poly.
class ModPoly {
 public:
  ModPoly(std::size_t nvars, std::uint64_t prime, std::vector<ModTerm> terms);

  std::size_t nvars() const { return nvars_; }
  std::uint64_t prime() const { return prime_; }
  std::span<const ModTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ModPoly& a, const ModPoly& b);

 private:
  std::size_t nvars_;
  std::uint64_t prime_;
  std::vector<ModTerm> terms_;
};

/// Coefficientwise reduction. Throws std::domain_error if the prime divides a denominator.
ModPoly reduce_mod(const Poly& p, std::uint64_t prime);

std::uint64_t eval_mod(const ModPoly& p, std::span<const std::uint64_t> point);
/// Evaluates the reduction of p without materializing it.
std::uint64_t eval_mod(const Poly& p, std::span<const std::uint64_t> point, const ModField& field);

/// Schwartz-Zippel test of a == b: reduces both and compares them at `trials`
/// uniformly random points of F_p^N. A false result proves a != b; a true
/// result is wrong with probability at most (deg/p)^trials.
bool identity_test_prob(const Poly& a, const Poly& b, std::uint64_t prime, unsigned trials,
                        std::mt19937_64& rng);

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
using DenseModPoly = std::vector<std::uint64_t>;

DenseModPoly dense_gcd(DenseModPoly a, DenseModPoly b, const ModField& field);

/// Miller-Rabin, deterministic for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace foliage
