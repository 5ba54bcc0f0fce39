#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "foliage/rational.hpp"

namespace foliage {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank_bareiss(const Matrix& m);
/// Rank as the largest order of a nonzero minor, scanning minors by cofactor expansion.
std::size_t rank_minors(const Matrix& m);

Rational determinant(const Matrix& m);

/// Basis of {v : m v = 0}, in reduced echelon form.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Some solution of m x = b, or nothing when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Coefficients c_0..c_n of det(t I - m) = sum c_k t^k (c_n = 1), Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

Rational trace(const Matrix& m);
bool is_nilpotent(const Matrix& m);

/// Rank over F_p of an integer-valued matrix given modulo p.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t prime);

}  // namespace foliage
