#ifndef OTALG_OTIDEAL_GROEBNER_HPP
#define OTALG_OTIDEAL_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/exactcore/monomial.hpp"
#include "otalg/nbc/broken_circuit.hpp"

namespace otalg {

// Lex with a uniformly random variable priority.
TermOrder random_lex_order(std::size_t nvars, std::uint64_t seed);

struct GroebnerResult {
  bool holds = false;
  bool dims_match = false;     // dim M_d = dim I_d
  bool initial_match = false;  // M_d is exactly the set of leading monomials of I_d
  bool sr_match = false;       // dim M_d = dim S_d - sr_hilbert(bc(A))_d
  unsigned degree_bound = 0;
  GroundOrder ground_order;    // induced by the term order
  std::vector<std::size_t> ideal_dims;
  std::vector<std::size_t> monomial_dims;
};

// M is the monomial ideal of leading terms of the circuit relations. Throws
// ConventionMismatch if some lt(r_C) is not the broken-circuit monomial of C
// for the induced ground order.
GroebnerResult groebner_degree_check(const Arrangement& a, const TermOrder& order, unsigned max_degree);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_GROEBNER_HPP
