#ifndef OTALG_ARRMAT_LATTICE_HPP
#define OTALG_ARRMAT_LATTICE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "otalg/arrmat/configuration.hpp"
#include "otalg/exactcore/unipoly.hpp"

namespace otalg {

struct Flat {
  Subset mask = 0;    // [X]
  std::size_t rank = 0;
  std::vector<Vector> subspace_basis;  // basis of the common zero set of [X]

  std::vector<std::size_t> indices() const { return elements_of(mask); }
  std::size_t size() const { return cardinality(mask); }
};

// Lattice of flats of a vector configuration. Flats are numbered by
// (rank, mask), so id 0 is the bottom and the last id is the top.
class FlatLattice {
 public:
  explicit FlatLattice(VectorConfiguration config);

  const VectorConfiguration& configuration() const { return config_; }
  std::size_t size() const { return flats_.size(); }
  std::size_t rank() const { return rank_start_.size() - 2; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(std::size_t id) const { return flats_[id]; }
  long mobius(std::size_t id) const { return mobius_[id]; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return flats_.size() - 1; }
  // Ids of the flats of rank k.
  std::vector<std::size_t> of_rank(std::size_t k) const;

  std::optional<std::size_t> find(Subset mask) const;
  // Throws PreconditionError when mask is not a flat.
  std::size_t id_of(Subset mask) const;
  bool is_flat(Subset mask) const { return find(mask).has_value(); }

  Subset closure(Subset s) const { return config_.closure(s); }
  bool leq(std::size_t a, std::size_t b) const { return is_subset(flats_[a].mask, flats_[b].mask); }
  std::size_t join(std::size_t a, std::size_t b) const { return id_of(closure(flats_[a].mask | flats_[b].mask)); }
  std::size_t meet(std::size_t a, std::size_t b) const { return id_of(flats_[a].mask & flats_[b].mask); }

 private:
  VectorConfiguration config_;
  std::vector<Flat> flats_;
  std::vector<std::size_t> rank_start_;
  std::vector<long> mobius_;
  std::unordered_map<Subset, std::size_t> index_;
};

// Sum over flats of mu(X) (-t)^rank(X).
UniPoly poincare(const FlatLattice& lattice);
// pi / (1+t); throws InvariantViolation if the division is not exact.
UniPoly projective_poincare(const UniPoly& pi);

}  // namespace otalg

#endif  // OTALG_ARRMAT_LATTICE_HPP
