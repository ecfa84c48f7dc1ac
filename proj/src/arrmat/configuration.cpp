#include "otalg/arrmat/configuration.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "otalg/errors.hpp"

namespace otalg {

std::vector<std::size_t> elements_of(Subset s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(std::span<const std::size_t> elements) {
  Subset s = 0;
  for (auto e : elements) {
    if (e >= kMaxGroundSet) throw PreconditionError("element index " + std::to_string(e) + " out of range");
    s |= bit(e);
  }
  return s;
}

std::string subset_to_string(Subset s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto e : elements_of(s)) {
    if (!first) out << ',';
    out << e + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

VectorConfiguration::VectorConfiguration(Matrix rows) : m_(std::move(rows)) {
  if (m_.rows() > kMaxGroundSet)
    throw PreconditionError("at most " + std::to_string(kMaxGroundSet) + " hyperplanes are supported");
  big_.reserve(m_.rows());
  fits_small_ = true;
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    auto r = m_.row(i);
    if (is_zero_vector(r))
      throw InvalidArrangement(InvalidArrangement::Reason::ZeroRow, "row " + std::to_string(i + 1) + " is zero");
    big_.push_back(primitive_integer_vector(r));
    for (const auto& z : big_.back()) fits_small_ = fits_small_ && z.fits_slong_p();
  }
  if (fits_small_) {
    small_.reserve(m_.rows() * m_.cols());
    for (const auto& r : big_)
      for (const auto& z : r) small_.push_back(z.get_si());
  }
}

namespace {

struct Overflow {};

// Bareiss rank on a row-major scratch buffer.
std::size_t small_rank(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    const std::int64_t piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        const __int128 v =
            (static_cast<__int128>(piv) * a[i * cols + j] - static_cast<__int128>(lead) * a[r * cols + j]) / prev;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
          throw Overflow{};
        a[i * cols + j] = static_cast<std::int64_t>(v);
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t VectorConfiguration::rank(Subset s) const {
  const std::size_t cols = m_.cols();
  if (s == 0) return 0;
  if (fits_small_) {
    std::vector<std::int64_t> scratch;
    scratch.reserve(cardinality(s) * cols);
    for (auto i : elements_of(s))
      scratch.insert(scratch.end(), small_.begin() + static_cast<std::ptrdiff_t>(i * cols),
                     small_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    try {
      return small_rank(scratch, cardinality(s), cols);
    } catch (const Overflow&) {
    }
  }
  std::vector<std::vector<Integer>> rows;
  for (auto i : elements_of(s)) rows.push_back(big_[i]);
  return integer_rank(rows);
}

Subset VectorConfiguration::closure(Subset s) const {
  const std::size_t r = rank(s);
  Subset out = s;
  for (std::size_t i = 0; i < size(); ++i)
    if (!contains(s, i) && rank(s | bit(i)) == r) out |= bit(i);
  return out;
}

Matrix VectorConfiguration::rows_of(Subset s) const {
  const auto idx = elements_of(s);
  return m_.select_rows(idx);
}

std::vector<Circuit> VectorConfiguration::circuits() const {
  const std::size_t n = size();
  std::vector<Subset> found;
  // Every circuit C is reached once, as (C minus its largest element) plus
  // that element, where the first part is independent.
  auto grow = [&](auto&& self, Subset indep, std::size_t next, std::size_t k) -> void {
    for (std::size_t j = next; j < n; ++j) {
      const Subset s = indep | bit(j);
      if (rank(s) == k + 1) {
        self(self, s, j + 1, k + 1);
        continue;
      }
      bool minimal = true;
      for (auto i : elements_of(indep)) {
        if (rank(s & ~bit(i)) != k) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(s);
    }
  };
  grow(grow, 0, 0, 0);

  std::vector<Circuit> out;
  out.reserve(found.size());
  for (Subset s : found) {
    Circuit c;
    c.mask = s;
    c.support = elements_of(s);
    const auto kernel = nullspace(rows_of(s).transpose());
    if (kernel.size() != 1) throw InvariantViolation("circuit " + subset_to_string(s) + " has a non-simple relation space");
    const Rational lead = kernel[0][0];
    c.coeffs = kernel[0];
    for (auto& x : c.coeffs) x /= lead;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

std::uint64_t VectorConfiguration::independent_count() const {
  const std::size_t n = size();
  std::uint64_t count = 0;
  auto grow = [&](auto&& self, Subset indep, std::size_t next, std::size_t k) -> void {
    ++count;
    for (std::size_t j = next; j < n; ++j) {
      const Subset s = indep | bit(j);
      if (rank(s) == k + 1) self(self, s, j + 1, k + 1);
    }
  };
  grow(grow, 0, 0, 0);
  return count;
}

}  // namespace otalg
