#ifndef OTALG_NBC_COMPLEX_HPP
#define OTALG_NBC_COMPLEX_HPP

#include <span>
#include <vector>

#include "otalg/arrmat/subset.hpp"
#include "otalg/exactcore/rational.hpp"

namespace otalg {

// Finite abstract simplicial complex on vertices 0..n-1, stored as its full
// face set (including the empty face). Faces are kept sorted by size, then
// by mask, so equality is plain vector equality.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Faces must be closed under taking subsets; InvariantViolation otherwise.
  SimplicialComplex(std::size_t vertices, std::vector<Subset> faces);
  static SimplicialComplex from_facets(std::size_t vertices, std::span<const Subset> facets);
  static SimplicialComplex simplex(std::size_t vertices, Subset on);

  std::size_t vertices() const { return n_; }
  const std::vector<Subset>& faces() const { return faces_; }
  bool contains(Subset face) const;
  std::vector<Subset> facets() const;

  // f[k] = number of faces with k vertices; f[0] = 1 unless the complex is void.
  std::vector<std::size_t> f_vector() const;
  std::size_t max_face_size() const;
  bool is_pure() const;

  // Faces contained in w.
  SimplicialComplex restrict_to(Subset w) const;
  // Faces not containing v.
  SimplicialComplex deletion(std::size_t v) const;
  SimplicialComplex cone(std::size_t apex) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Subset> faces_;
};

// Join of complexes on disjoint vertex sets of a common ground set.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Hilbert function of the Stanley-Reisner ring, degrees 0..d_max:
// H(0) = 1 and H(d) = sum_k f[k] * binom(d-1, k-1).
std::vector<Integer> sr_hilbert(const SimplicialComplex& c, unsigned d_max);

// f-vector of a join: convolution of the two f-vectors.
std::vector<std::size_t> convolve(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace otalg

#endif  // OTALG_NBC_COMPLEX_HPP
