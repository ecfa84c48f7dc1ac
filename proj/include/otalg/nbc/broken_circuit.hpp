#ifndef OTALG_NBC_BROKEN_CIRCUIT_HPP
#define OTALG_NBC_BROKEN_CIRCUIT_HPP

#include <span>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/nbc/complex.hpp"

namespace otalg {

// A ground order lists the elements from least to greatest.
using GroundOrder = std::vector<std::size_t>;

GroundOrder natural_order(std::size_t n);
// [X] first, then the rest, each ascending.
GroundOrder flat_first_order(std::size_t n, Subset flat);

// Complex of subsets containing no broken circuit C - min(C), min taken in
// `order`. Works on any matroid given by its circuits; `rank` is only used
// for the purity assertion (max face size = rank, all facets that size).
SimplicialComplex bc_complex(std::size_t n, std::size_t rank, std::span<const Subset> circuits,
                             const GroundOrder& order);
SimplicialComplex bc_complex(const Arrangement& a, const GroundOrder& order);
SimplicialComplex bc_complex(const Arrangement& a);

// nbc sets avoiding the least element e; asserts bc = cone over this with
// apex e, and purity with max face size rank - 1.
SimplicialComplex reduced_bc_complex(const Arrangement& a, const GroundOrder& order);
SimplicialComplex reduced_bc_complex(const Arrangement& a);

struct BcModularResult {
  bool subcomplex = false;  // bc0(T_X) inside bc(A) restricted to [n]-[X]
  bool equal = false;
  bool modular = false;
};

// Compares bc0 of the complete principal truncation (element 0 least) with
// bc(A) on the complement of [X], with [X] made initial. Throws
// InvariantViolation if containment fails or equality disagrees with
// modularity; PreconditionError for the bottom flat.
BcModularResult bc_modular_check(const Arrangement& a, Subset flat, std::uint64_t seed = 1);

// Whether bc(A) is the join of its restrictions to [X] and to the rest, with
// [X] made initial. Throws InvariantViolation if that disagrees with
// modularity of X.
bool join_decomposition_check(const Arrangement& a, Subset flat);

}  // namespace otalg

#endif  // OTALG_NBC_BROKEN_CIRCUIT_HPP
