#ifndef OTALG_EXACTCORE_LINALG_HPP
#define OTALG_EXACTCORE_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "otalg/exactcore/rational.hpp"

namespace otalg {

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws DimensionMismatch for ragged input.
  explicit Matrix(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  std::vector<Vector> row_vectors() const;
  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> idx) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination. Empty input has rank 0;
// ragged input throws DimensionMismatch.
std::size_t exact_rank(std::span<const Vector> rows);
std::size_t exact_rank(const Matrix& m);
// Integer-row variant used by the combinatorial layers; tries machine words
// first and falls back to GMP integers on overflow.
std::size_t integer_rank(std::span<const std::vector<Integer>> rows);
// Machine-word elimination on a scratch copy; nullopt when an intermediate
// minor leaves int64.
std::optional<std::size_t> small_integer_rank(std::vector<std::vector<std::int64_t>> rows);

// Bareiss determinant of a square matrix.
Rational determinant(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon rref(const Matrix& m);

// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Rational dot(const Vector& a, const Vector& b);

}  // namespace otalg

#endif  // OTALG_EXACTCORE_LINALG_HPP
