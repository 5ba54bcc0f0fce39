#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "foliage/rational.hpp"

namespace foliage {

/// Upper bound on the number of variables of any Poly.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. Unused slots are zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t var, unsigned power = 1);

  unsigned operator[](std::size_t var) const { return exp_[var]; }
  void set(std::size_t var, unsigned power);
  unsigned degree() const { return degree_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with x0 > x1 > ... ; true when a is strictly greater.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are stored in strictly descending graded-lex order with nonzero
/// coefficients, so two polynomials are equal exactly when their term
/// vectors are equal.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Poly(std::size_t nvars, std::vector<Term> terms);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t var);
  static Poly monomial(std::size_t nvars, const Monomial& mono, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Greatest term in grlex order. Requires a nonzero polynomial.
  const Term& leading_term() const;
  Rational coeff(const Monomial& mono) const;
  Rational constant_term() const;
  /// Absent for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  unsigned degree_in(std::size_t var) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  struct Presorted {};
  Poly(Presorted, std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars_;
  std::vector<Term> terms_;

  friend Poly add_scaled(const Poly& a, const Poly& b, const Rational& c, const Monomial& m);
};

/// Additive/multiplicative helpers matching the ring operations.
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, const Rational& c);

/// a + c*m*b, computed in one merge.
Poly add_scaled(const Poly& a, const Poly& b, const Rational& c, const Monomial& m);

Poly pow(const Poly& p, unsigned exponent);

/// Formal partial derivative with respect to `var`. Throws std::out_of_range.
Poly partial(const Poly& p, std::size_t var);

/// Exact evaluation. Throws std::invalid_argument on a length mismatch.
Rational eval(const Poly& p, std::span<const Rational> point);

/// Marker returned by homogeneous_degree for the zero polynomial.
struct AnyDegree {
  friend bool operator==(AnyDegree, AnyDegree) = default;
};
using HomogeneousDegree = std::variant<AnyDegree, unsigned>;

/// Common total degree of all terms, AnyDegree for zero, absent when inhomogeneous.
std::optional<HomogeneousDegree> homogeneous_degree(const Poly& p);

/// Substitutes x_i -> subs[i]; all substitutes must share one variable count.
Poly compose(const Poly& p, std::span<const Poly> subs);

/// p(x + shift), i.e. the Taylor expansion of p centered at `shift`.
Poly translate(const Poly& p, std::span<const Rational> shift);

/// Keeps terms of total degree <= max_degree.
Poly truncate(const Poly& p, unsigned max_degree);
/// Keeps terms of total degree exactly `degree`.
Poly homogeneous_slice(const Poly& p, unsigned degree);

/// Returns q with a == q*b, or nothing when b does not divide a. Throws on b == 0.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Reinterprets p in a larger ambient ring; new variables are appended and unused.
Poly extend_vars(const Poly& p, std::size_t nvars);

}  // namespace foliage
