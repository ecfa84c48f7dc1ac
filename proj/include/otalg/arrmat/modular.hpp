#ifndef OTALG_ARRMAT_MODULAR_HPP
#define OTALG_ARRMAT_MODULAR_HPP

#include <optional>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"

namespace otalg {

struct ModularityVerdict {
  bool modular = false;
  bool subspace_sum = false;   // X+Y is an intersection subspace for all Y
  bool rank_identity = false;  // r(X)+r(Y) = r(X v Y)+r(X ^ Y) for all Y
  bool short_circuit = false;  // Brylawski's circuit criterion
};

// Evaluates the three criteria independently; InvariantViolation if they
// disagree. PreconditionError if the mask is not a flat.
ModularityVerdict is_modular(const Arrangement& a, Subset flat);

// The rank-identity test alone, for searches that call it many times.
bool is_modular_by_rank(const FlatLattice& lattice, std::size_t flat_id);

struct SupersolvableChain {
  std::vector<Subset> chain;           // X_1 < ... < X_l, rank(X_i) = i
  std::vector<std::size_t> exponents;  // |[X_i]| - |[X_{i-1}]|
};

// Depth-first search for a maximal chain of modular flats. When one is found
// the product of (1 + e_i t) is checked against the Poincare polynomial.
std::optional<SupersolvableChain> supersolvable_chain(const Arrangement& a);

}  // namespace otalg

#endif  // OTALG_ARRMAT_MODULAR_HPP
