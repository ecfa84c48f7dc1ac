#ifndef OTALG_OTIDEAL_BETTI_HPP
#define OTALG_OTIDEAL_BETTI_HPP

#include <vector>

#include "otalg/exactcore/rational.hpp"
#include "otalg/exactcore/unipoly.hpp"

namespace otalg {

// table[i][j] is the coefficient of s^i t^j.
using SeriesTable = std::vector<std::vector<Integer>>;

// Q_{n,l}(t) = sum_{p=0}^{n-l-1} C(n-1, l+p) C(l-1+p, l-1) t^p.
UniPoly generic_q(std::size_t n, std::size_t l);

// Coefficient of x^l y^n in y/(1-y) * (1-(1+t)y)/(1-(1+t+x)y), extracted by
// expanding the series in y with coefficients in Z[x, t].
UniPoly generic_q_generating(std::size_t n, std::size_t l);

// Uniform-matroid Poincare polynomial: C(n, k) t^k for k < l, top term fixed
// by pi(-1) = 0.
UniPoly uniform_poincare(std::size_t n, std::size_t l);

struct BettiData {
  std::size_t n = 0, l = 0;
  unsigned s_degree = 0, t_degree = 0;
  UniPoly q;
  UniPoly q_generating;
  SeriesTable p;  // (1+st)^n / (1 - s^2 t^l Q(st)), by series division
  bool q_matches = false;         // binomial formula vs generating function
  bool p_matches_geometric = false;  // division vs (1+st)^n sum_k (s^2 t^l Q(st))^k
  bool euler_matches = false;     // P(-1, t) * pi_U(t/(1-t)) = 1 through t^{t_degree}
};

// PreconditionError unless n > l >= 3.
BettiData generic_betti(std::size_t n, std::size_t l, unsigned s_degree, unsigned t_degree);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_BETTI_HPP
