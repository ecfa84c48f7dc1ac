#ifndef OTALG_OTIDEAL_HILBERT_HPP
#define OTALG_OTIDEAL_HILBERT_HPP

#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/nbc/broken_circuit.hpp"
#include "otalg/otideal/graded.hpp"

namespace otalg {

// max(l + 2, 6)
unsigned default_degree(const Arrangement& a);

// Hilbert function of OT(A) = S/I(A) through degree D, by linear algebra on
// the circuit relations.
std::vector<Integer> ot_hilbert(const Arrangement& a, unsigned max_degree);

// Hilbert function of OT_I(A) = OT(A)/(y_i : i not in I), in |I| variables.
std::vector<Integer> relative_ot_hilbert(const Arrangement& a, Subset kept, unsigned max_degree);

// Coefficients 0..D of p(t/(1-t)).
std::vector<Rational> poincare_series(const UniPoly& p, unsigned max_degree);

struct TeraoResult {
  bool holds = false;
  unsigned degree_bound = 0;
  std::vector<Integer> algebraic;  // from the graded view
  std::vector<Rational> expected;  // from pi(A, t/(1-t))
};
TeraoResult terao_check(const Arrangement& a, unsigned max_degree);

struct RelativeHilbertResult {
  bool holds = false;           // both parts below
  bool matches_projective = false;  // h(OT_H) = pi(PA, t/(1-t))
  bool exact_sequence = false;      // h(OT)_d = sum_{e <= d} h(OT_H)_e
  unsigned degree_bound = 0;
  std::vector<Integer> relative;
  std::vector<Rational> expected;
};
// H is a 0-based hyperplane index.
RelativeHilbertResult relative_hilbert_check(const Arrangement& a, std::size_t hyperplane, unsigned max_degree);

struct RelativeInitialResult {
  bool holds = false;
  unsigned degree_bound = 0;
  std::vector<Integer> algebraic;      // S/((y_1..y_{k-1}) + I(A))
  std::vector<Integer> combinatorial;  // Stanley-Reisner of bc(A)|_{k..n}
};
// k is 1-based as in I = {k, ..., n}; bc(A) uses the natural order.
RelativeInitialResult relative_initial_check(const Arrangement& a, std::size_t k, unsigned max_degree);

struct KoszulNecessaryResult {
  bool passes = false;
  unsigned degree_bound = 0;
  std::vector<Rational> inverse;  // coefficients of 1/h(OT(A), -t)
};
// Uses the Hilbert function from the graded view, so it inherits whatever
// terao_check certifies about it.
KoszulNecessaryResult koszul_necessary(const Arrangement& a, unsigned max_degree);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_HILBERT_HPP
