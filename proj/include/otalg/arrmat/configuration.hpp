#ifndef OTALG_ARRMAT_CONFIGURATION_HPP
#define OTALG_ARRMAT_CONFIGURATION_HPP

#include <cstdint>
#include <vector>

#include "otalg/arrmat/subset.hpp"
#include "otalg/exactcore/linalg.hpp"

namespace otalg {

// A minimal dependent set and its (unique up to scale) linear relation,
// scaled so the coefficient at the least support element is 1.
struct Circuit {
  std::vector<std::size_t> support;  // sorted, 0-based
  Vector coeffs;                     // coeffs[k] belongs to support[k]
  Subset mask = 0;

  std::size_t size() const { return support.size(); }
};

// An ordered list of nonzero vectors and the linear matroid it realizes.
// Parallel vectors are allowed here (fibres can collapse); Arrangement adds
// the stricter invariants.
class VectorConfiguration {
 public:
  VectorConfiguration() = default;
  // Throws InvalidArrangement on a zero row, PreconditionError past 31 rows.
  explicit VectorConfiguration(Matrix rows);

  std::size_t size() const { return m_.rows(); }
  std::size_t dim() const { return m_.cols(); }
  const Matrix& matrix() const { return m_; }
  Vector row(std::size_t i) const { return m_.row(i); }

  std::size_t rank() const { return rank(full_set(size())); }
  std::size_t rank(Subset s) const;
  bool is_independent(Subset s) const { return rank(s) == cardinality(s); }
  Subset closure(Subset s) const;
  // Rows with index in s, as a matrix.
  Matrix rows_of(Subset s) const;

  // All circuits, ordered lexicographically by sorted support.
  std::vector<Circuit> circuits() const;
  // Number of independent subsets (including the empty set).
  std::uint64_t independent_count() const;

 private:
  Matrix m_;
  std::vector<std::int64_t> small_;  // primitive integer rows, row-major
  std::vector<std::vector<Integer>> big_;
  bool fits_small_ = false;
};

}  // namespace otalg

#endif  // OTALG_ARRMAT_CONFIGURATION_HPP
