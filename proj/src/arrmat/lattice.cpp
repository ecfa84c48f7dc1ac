#include "otalg/arrmat/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "otalg/errors.hpp"

namespace otalg {

FlatLattice::FlatLattice(VectorConfiguration config) : config_(std::move(config)) {
  const std::size_t n = config_.size();
  const std::size_t top_rank = config_.rank();
  std::vector<std::vector<Subset>> by_rank(top_rank + 1);
  std::unordered_set<Subset> seen;
  by_rank[0].push_back(config_.closure(0));
  seen.insert(by_rank[0][0]);
  // Flats of rank k+1 are exactly the closures F + i over flats F of rank k.
  for (std::size_t k = 0; k < top_rank; ++k) {
    for (Subset f : by_rank[k]) {
      Subset covered = f;
      for (std::size_t i = 0; i < n; ++i) {
        if (contains(covered, i)) continue;
        const Subset c = config_.closure(f | bit(i));
        covered |= c;
        if (seen.insert(c).second) by_rank[k + 1].push_back(c);
      }
    }
  }

  rank_start_.push_back(0);
  for (std::size_t k = 0; k <= top_rank; ++k) {
    std::sort(by_rank[k].begin(), by_rank[k].end());
    for (Subset m : by_rank[k]) {
      Flat f;
      f.mask = m;
      f.rank = k;
      f.subspace_basis = nullspace(config_.rows_of(m));
      index_.emplace(m, flats_.size());
      flats_.push_back(std::move(f));
    }
    rank_start_.push_back(flats_.size());
  }

  mobius_.assign(flats_.size(), 0);
  mobius_[0] = 1;
  for (std::size_t x = 1; x < flats_.size(); ++x) {
    long acc = 0;
    for (std::size_t y = 0; y < rank_start_[flats_[x].rank]; ++y)
      if (is_subset(flats_[y].mask, flats_[x].mask)) acc += mobius_[y];
    mobius_[x] = -acc;
  }
}

std::vector<std::size_t> FlatLattice::of_rank(std::size_t k) const {
  std::vector<std::size_t> out;
  if (k > rank()) return out;
  for (std::size_t id = rank_start_[k]; id < rank_start_[k + 1]; ++id) out.push_back(id);
  return out;
}

std::optional<std::size_t> FlatLattice::find(Subset mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FlatLattice::id_of(Subset mask) const {
  auto id = find(mask);
  if (!id) throw PreconditionError(subset_to_string(mask) + " is not a flat");
  return *id;
}

UniPoly poincare(const FlatLattice& lattice) {
  std::vector<Rational> coeffs(lattice.rank() + 1);
  for (std::size_t id = 0; id < lattice.size(); ++id) {
    const std::size_t r = lattice.flat(id).rank;
    coeffs[r] += (r % 2 == 0) ? lattice.mobius(id) : -lattice.mobius(id);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly projective_poincare(const UniPoly& pi) {
  try {
    return pi.divide_exact(UniPoly{1, 1});
  } catch (const InvariantViolation&) {
    throw InvariantViolation("1+t does not divide " + pi.to_string());
  }
}

}  // namespace otalg
