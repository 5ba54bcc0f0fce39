#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "foliage/exterior.hpp"

namespace foliage {

/// Syntax or semantic error in polynomial / form / vector-field text.
/// Line and column are 1-based and point at the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Parses `3/2*x0^2*x1 - x3`. With nvars == 0 the variable count is the
/// largest index used plus one (at least 1); otherwise larger indices are
/// rejected as unknown variables.
Poly parse_poly(std::string_view text, std::size_t nvars = 0);

/// Parses `(poly)*dx0^dx2 - (poly)*dx1^dx3`; a bare `dx0^dx1` has coefficient 1
/// and a bare `(poly)` is a 0-form. `0` needs `formdeg` to be given.
PForm parse_form(std::string_view text, std::size_t nvars = 0, std::optional<std::size_t> formdeg = std::nullopt);

/// Parses `(poly)*d/dx0 + (poly)*d/dx2`; `0` needs nvars.
PVec parse_vector_field(std::string_view text, std::size_t nvars = 0);

/// Canonical text: terms in descending graded-lex order, unit coefficients omitted.
std::string to_string(const Poly& p);
/// Canonical text; a component with negative leading coefficient prints as `-(...)`.
std::string to_string(const PForm& a);
std::string to_string(const PVec& v);
std::string to_string(const Point& p);

}  // namespace foliage
