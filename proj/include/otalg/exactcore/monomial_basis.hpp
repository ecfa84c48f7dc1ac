#ifndef OTALG_EXACTCORE_MONOMIAL_BASIS_HPP
#define OTALG_EXACTCORE_MONOMIAL_BASIS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "otalg/exactcore/monomial.hpp"

namespace otalg {

// Dense exponent vector packed four bits per variable. Used only inside the
// degreewise linear algebra, which is limited to 16 variables and degree 15.
using PackedMonomial = std::uint64_t;

inline constexpr std::size_t kMaxPackedVars = 16;
inline constexpr unsigned kMaxPackedDegree = 15;

PackedMonomial pack(const Monomial& m);
Monomial unpack(PackedMonomial p, std::size_t nvars);
inline unsigned packed_exponent(PackedMonomial p, std::size_t v) { return static_cast<unsigned>((p >> (4 * v)) & 0xFu); }

// All monomials of one degree in nvars variables, sorted from largest to
// smallest under a term order; column i of a degree-d Macaulay matrix is the
// i-th monomial, so smaller column means larger monomial.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree, const TermOrder& order);

  std::size_t size() const { return monomials_.size(); }
  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  PackedMonomial at(std::size_t i) const { return monomials_[i]; }
  const std::vector<PackedMonomial>& monomials() const { return monomials_; }
  std::uint32_t index_of(PackedMonomial p) const { return index_.at(p); }

  // All packed monomials of degree d (unsorted enumeration order).
  static std::vector<PackedMonomial> enumerate(std::size_t nvars, unsigned degree);

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<PackedMonomial> monomials_;
  std::unordered_map<PackedMonomial, std::uint32_t> index_;
};

}  // namespace otalg

#endif  // OTALG_EXACTCORE_MONOMIAL_BASIS_HPP
