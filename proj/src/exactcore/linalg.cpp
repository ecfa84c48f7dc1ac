#include "otalg/exactcore/linalg.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "otalg/errors.hpp"

namespace otalg {

Matrix::Matrix(const std::vector<Vector>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols_) {
      throw DimensionMismatch("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                              ", expected " + std::to_string(cols_));
    }
    data_.insert(data_.end(), rows[i].begin(), rows[i].end());
  }
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(idx[k], j);
  return out;
}

namespace {

struct Overflow {};

std::int64_t checked_cross(std::int64_t p, std::int64_t a, std::int64_t q, std::int64_t b, std::int64_t prev) {
  const __int128 v = static_cast<__int128>(p) * a - static_cast<__int128>(q) * b;
  const __int128 r = v / prev;
  if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return static_cast<std::int64_t>(r);
}

// Fraction-free elimination in place. Every intermediate entry is a minor of
// the input, so the division by the previous pivot is exact.
template <typename Int, typename Cross>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, std::size_t cols, Cross cross) {
  const std::size_t rows = m.size();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = cross(m[r][c], m[i][j], m[i][c], m[r][j], prev);
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

bool fits_int64(const Integer& z) { return z.fits_slong_p() != 0; }

}  // namespace

std::size_t integer_rank(std::span<const std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  bool small = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row " + std::to_string(i) + " has the wrong length");
    for (const auto& z : rows[i]) small = small && fits_int64(z);
  }
  if (small) {
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j].get_si();
    try {
      return bareiss_rank(m, cols, checked_cross);
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  std::vector<std::vector<Integer>> m(rows.begin(), rows.end());
  return bareiss_rank(m, cols, [](const Integer& p, const Integer& a, const Integer& q, const Integer& b,
                                  const Integer& prev) -> Integer {
    Integer v = p * a - q * b;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
    return v;
  });
}

std::optional<std::size_t> small_integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  try {
    return bareiss_rank(rows, cols, checked_cross);
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

std::size_t exact_rank(std::span<const Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Integer>> ints;
  ints.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                              ", expected " + std::to_string(cols));
    }
    ints.push_back(primitive_integer_vector(rows[i]));
  }
  return integer_rank(ints);
}

std::size_t exact_rank(const Matrix& m) {
  const auto rows = m.row_vectors();
  return exact_rank(std::span<const Vector>(rows));
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, remembering the scale.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(m(i, j).get_den()));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale /= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1]) * scale * sign;
}

RowEchelon rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::vector<Vector> nullspace(const Matrix& m) {
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length does not match row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto [red, pivots] = rref(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = red(i, m.cols());
  }
  return x;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace otalg
