#include "foliage/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "foliage/modpoly.hpp"

namespace foliage {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.push_back((*this)(r, c));
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        p(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return p;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  Matrix d = a;
  for (std::size_t i = 0; i < d.data_.size(); ++i) {
    d.data_[i] -= b.data_[i];
  }
  return d;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) {
    x *= s;
  }
  return m;
}

namespace {

// Rows scaled to integers by clearing denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * l;
      out[r][c] = scaled.get_num();
    }
  }
  return out;
}

Rational laplace_det(const Matrix& m, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) {
    return m(rows[0], cols[0]);
  }
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  Rational sum = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Rational& entry = m(rows[0], cols[j]);
    if (is_zero(entry)) {
      continue;
    }
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(j));
    const Rational minor = laplace_det(m, sub_rows, sub_cols);
    sum += (j % 2 == 0 ? entry : Rational(-entry)) * minor;
  }
  return sum;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  while (true) {
    if (f(idx)) {
      return;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && is_zero(a(pivot, col))) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::swap(a(row, c), a(pivot, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      a(row, c) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) {
        continue;
      }
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_bareiss(const Matrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer v = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_minors(const Matrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = top; k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        found = !is_zero(laplace_det(m, rows, cols));
        return found;
      });
      return found;
    });
    if (found) {
      return k;
    }
  }
  return 0;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (m.rows() == 0) {
    return 1;
  }
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(col, c), a(pivot, c));
      }
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) {
        continue;
      }
      const Rational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
      }
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -a(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side length mismatch");
  }
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      aug(r, c) = m(r, c);
    }
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) {
    return std::nullopt;
  }
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug(r, m.cols());
  }
  return x;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) {
      next(i, i) += c[n - k + 1];
    }
    mk = next;
    const Matrix am = m * mk;
    c[n - k] = -trace(am) / Rational(static_cast<long>(k));
  }
  return c;
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    t += m(i, i);
  }
  return t;
}

bool is_nilpotent(const Matrix& m) {
  const auto c = characteristic_polynomial(m);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (!is_zero(c[k])) {
      return false;
    }
  }
  return true;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t prime) {
  const ModField field(prime);
  if (rows.empty()) {
    return 0;
  }
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) {
        continue;
      }
      const std::uint64_t factor = field.mul(rows[r][col], inv);
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace foliage
