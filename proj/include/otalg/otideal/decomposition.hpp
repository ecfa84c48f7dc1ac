#ifndef OTALG_OTIDEAL_DECOMPOSITION_HPP
#define OTALG_OTIDEAL_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/exactcore/multipoly.hpp"

namespace otalg {

struct FactorizationResult {
  bool hilbert_factors = false;  // h(OT(A)) = h(OT(A_X)) * h(OT_{[n]-[X]}(A))
  bool pi_factors = false;       // pi(A)(1+t) = pi(A_X) pi(T_X)
  bool fibre_match = false;      // h(OT_{[n]-[X]}(A)) = h(OT_X(A_v)), v generic
  bool fibre_inequality = false; // the same with >=, degreewise
  bool modular = false;
  unsigned degree_bound = 0;
  std::vector<Integer> full, restricted, relative, fibre;
  UniPoly truncation_poincare;
};

// X of positive rank. Throws InvariantViolation if any of the three
// sub-checks disagrees with modularity or the fibre inequality fails.
FactorizationResult modular_factorization_check(const Arrangement& a, Subset flat, unsigned max_degree,
                                                std::uint64_t seed = 1);

struct CoatomQuadric {
  std::size_t i = 0, j = 0, join = 0;  // join is i o j, inside [X]
  Rational a, b;                       // f_join = a f_i + b f_j
  MultiPoly quadric;                   // y_i y_j - y_join (a y_j + b y_i)
};

struct CoatomResult {
  bool holds = false;
  unsigned degree_bound = 0;
  std::vector<CoatomQuadric> quadrics;
  std::vector<unsigned> failing_degrees;
};

// PreconditionError unless X is a modular coatom.
CoatomResult coatom_presentation_check(const Arrangement& a, Subset flat, unsigned max_degree);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_DECOMPOSITION_HPP
