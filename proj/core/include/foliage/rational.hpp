#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace foliage {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point of affine space with exact coordinates.
using Point = std::vector<Rational>;

/// `p` or `p/q`, denominator positive.
std::string to_string(const Rational& r);

/// Accepts `p`, `-p`, `p/q`. Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonicalizes after in-place mpq arithmetic that skipped it.
inline Rational normalized(Rational r) {
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace foliage
