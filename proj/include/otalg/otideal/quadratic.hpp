#ifndef OTALG_OTIDEAL_QUADRATIC_HPP
#define OTALG_OTIDEAL_QUADRATIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/nbc/broken_circuit.hpp"

namespace otalg {

enum class QuadraticMethod {
  Auto,           // linear algebra when dim S_l is small enough, else the certificate
  LinearAlgebra,  // dim I_d = dim (S_{d-2} I_2)_d for 2 < d <= l
  InitialIdeal,   // every broken circuit contains a broken 3-circuit
};

std::string to_string(QuadraticMethod m);

// Largest dim S_l for which Auto still runs the linear algebra.
inline constexpr unsigned long kQuadraticLinearBudget = 20000;

struct QuadraticResult {
  bool quadratic = false;
  QuadraticMethod method = QuadraticMethod::Auto;  // the one actually used
  std::size_t quadrics = 0;                        // dim I_2
  unsigned degree_bound = 0;                       // l
  std::optional<unsigned> failing_degree;
  std::vector<std::size_t> ideal_dims;    // linear algebra only
  std::vector<std::size_t> quadric_dims;  // linear algebra only
  GroundOrder certificate_order;          // initial-ideal route only
};

// The initial-ideal route is a certificate only in the positive direction:
// with in(I) generated by broken-circuit monomials, a broken 3-circuit inside
// every broken circuit puts in(I) inside in(S I_2). If no tried order
// certifies, it falls back to linear algebra, or throws PreconditionError when
// that is over budget.
QuadraticResult is_quadratic(const Arrangement& a, QuadraticMethod method = QuadraticMethod::Auto);

// Orders tried by the certificate: natural, then one compatible with a
// modular chain when A is supersolvable.
std::optional<GroundOrder> quadratic_certificate_order(const Arrangement& a);

struct TwoFormalResult {
  bool formal = false;
  std::size_t relation_dim = 0;  // n - l
  std::size_t triple_rank = 0;   // rank of the 3-circuit coefficient vectors
};
TwoFormalResult is_2formal(const Arrangement& a);

struct QciResult {
  bool qci = false;  // the common verdict
  bool quadratic_ci = false;         // quadratic, with n - l quadrics
  bool mu_bound_and_count = false;   // quadratic, and the raw condition below
  bool pi_form = false;              // quadratic, and the raw condition below
  bool ss_exponents12 = false;
  bool lineclosed_3forest = false;
  bool quadratic = false;
  bool mu_bound_and_count_raw = false;  // rank-2 flats <= 3 hyperplanes, n - l triple points
  bool pi_form_raw = false;             // pi = (1+t)^{2l-n} (1+2t)^{n-l}
  QuadraticResult quadratic_detail;
};

// The conditions of the numerical q.c.i. characterisation only claim
// equivalence among quadratic arrangements, so those two are evaluated under
// that hypothesis; the raw values are kept alongside. Throws
// InvariantViolation if the five verdicts disagree.
QciResult qci_check(const Arrangement& a);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_QUADRATIC_HPP
