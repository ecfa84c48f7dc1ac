#ifndef OTALG_OTIDEAL_RELATIONS_HPP
#define OTALG_OTIDEAL_RELATIONS_HPP

#include <span>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/exactcore/multipoly.hpp"

namespace otalg {

// Variable y_i is Var i, matching hyperplane i (0-based).

// r_c = sum_i c_i prod_{j in [c], j != i} y_j. PreconditionError for
// supports of size < 3, which a simple matroid never has.
MultiPoly circuit_relation(const Circuit& c);

// The relation modulo y_i: r_c itself when i is off the support, otherwise
// the monomial prod_{j in [c] - i} y_j.
MultiPoly relative_relation(const Circuit& c, std::size_t i);

std::vector<MultiPoly> circuit_relations(std::span<const Circuit> circuits);
std::vector<MultiPoly> circuit_relations(const Arrangement& a);

// Renumbering of the variables that survive when `killed` is set to zero:
// the surviving indices in increasing order become 0, 1, ...
struct VariableMap {
  std::vector<std::size_t> kept;      // new -> old
  std::vector<std::int32_t> new_of;   // old -> new, -1 if killed
  std::size_t size() const { return kept.size(); }
};
VariableMap surviving_variables(std::size_t n, Subset killed);

// Generators of (I + (y_i : i in killed)) / (y_i : i in killed) in the
// surviving variables. A circuit meeting `killed` twice contributes nothing;
// meeting it once it contributes a monomial (a unit multiple of the
// relative relation), otherwise r_c unchanged.
std::vector<MultiPoly> quotient_relations(std::span<const Circuit> circuits, std::size_t n, Subset killed);

// p with every variable v replaced by map[v].
MultiPoly rename_variables(const MultiPoly& p, std::span<const std::size_t> map);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_RELATIONS_HPP
