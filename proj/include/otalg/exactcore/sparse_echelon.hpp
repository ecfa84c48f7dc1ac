#ifndef OTALG_EXACTCORE_SPARSE_ECHELON_HPP
#define OTALG_EXACTCORE_SPARSE_ECHELON_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "otalg/exactcore/rational.hpp"

namespace otalg {

// Thrown by the machine-word coefficient policy when a value leaves int64;
// callers rerun the computation with GMP integers.
struct CoefficientOverflow {};

namespace detail {

inline std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw CoefficientOverflow{};
  return static_cast<std::int64_t>(v);
}

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline Integer gcd_of(const Integer& a, const Integer& b) { return gcd(a, b); }

// x*a - y*b
inline std::int64_t cross(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  return checked(static_cast<__int128>(a) * x - static_cast<__int128>(b) * y);
}
inline Integer cross(const Integer& a, const Integer& x, const Integer& b, const Integer& y) { return a * x - b * y; }

inline std::int64_t abs_of(std::int64_t a) { return a < 0 ? -a : a; }
inline Integer abs_of(const Integer& a) { return abs(a); }

}  // namespace detail

// Integer row space in echelon form over columns 0..ncols-1, where column 0 is
// the most significant. Rows are only top-reduced: pivots have pairwise
// distinct leading columns, which is all a rank or membership query needs.
// Elimination is fraction-free: r <- a*r - b*p with the gcd divided out.
template <typename Coeff>
class SparseEchelon {
 public:
  struct Entry {
    std::uint32_t col;
    Coeff val;
  };
  using Row = std::vector<Entry>;

  explicit SparseEchelon(std::size_t ncols) : pivot_of_col_(ncols, -1) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return pivot_of_col_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  // Entries must be sorted by column with no zero values. Returns true when
  // the row was independent of the current span.
  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    make_primitive(row);
    pivot_of_col_[row.front().col] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(Row row) const {
    reduce(row);
    return row.empty();
  }

  std::vector<std::uint32_t> leading_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front().col);
    return out;
  }

 private:
  void reduce(Row& row) const {
    Row scratch;
    while (!row.empty()) {
      const std::int32_t p = pivot_of_col_[row.front().col];
      if (p < 0) return;
      const Row& piv = rows_[static_cast<std::size_t>(p)];
      Coeff a = piv.front().val;
      Coeff b = row.front().val;
      const Coeff g = detail::gcd_of(a, b);
      a /= g;
      b /= g;
      scratch.clear();
      scratch.reserve(row.size() + piv.size());
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back({row[i].col, detail::cross(a, row[i].val, Coeff(0), Coeff(0))});
          ++i;
        } else if (i == row.size() || piv[j].col < row[i].col) {
          scratch.push_back({piv[j].col, detail::cross(Coeff(0), Coeff(0), b, piv[j].val)});
          ++j;
        } else {
          Coeff v = detail::cross(a, row[i].val, b, piv[j].val);
          if (v != 0) scratch.push_back({row[i].col, std::move(v)});
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
      if (row.size() > 1) make_primitive(row);
    }
  }

  static void make_primitive(Row& row) {
    Coeff g = 0;
    for (const auto& e : row) {
      g = detail::gcd_of(g, e.val);
      if (g == 1) return;
    }
    g = detail::abs_of(g);
    if (g > 1)
      for (auto& e : row) e.val /= g;
  }

  std::vector<std::int32_t> pivot_of_col_;
  std::vector<Row> rows_;
};

}  // namespace otalg

#endif  // OTALG_EXACTCORE_SPARSE_ECHELON_HPP
