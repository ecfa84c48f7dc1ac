#include "otalg/otideal/hilbert.hpp"

#include <algorithm>

#include "otalg/errors.hpp"
#include "otalg/exactcore/ratfun.hpp"
#include "otalg/otideal/relations.hpp"

namespace otalg {

unsigned default_degree(const Arrangement& a) { return std::max<unsigned>(static_cast<unsigned>(a.rank()) + 2, 6); }

std::vector<Integer> ot_hilbert(const Arrangement& a, unsigned max_degree) {
  return graded_view(circuit_relations(a), a.n(), max_degree).hilbert;
}

std::vector<Integer> relative_ot_hilbert(const Arrangement& a, Subset kept, unsigned max_degree) {
  const Subset killed = full_set(a.n()) & ~kept;
  return graded_view(quotient_relations(a.circuits(), a.n(), killed), cardinality(kept), max_degree).hilbert;
}

std::vector<Rational> poincare_series(const UniPoly& p, unsigned max_degree) {
  return series_expand(substitute_t_over_1mt(p), max_degree);
}

namespace {

bool same_values(const std::vector<Integer>& h, const std::vector<Rational>& q) {
  if (h.size() != q.size()) return false;
  for (std::size_t d = 0; d < h.size(); ++d)
    if (Rational(h[d]) != q[d]) return false;
  return true;
}

}  // namespace

TeraoResult terao_check(const Arrangement& a, unsigned max_degree) {
  TeraoResult r;
  r.degree_bound = max_degree;
  r.algebraic = ot_hilbert(a, max_degree);
  r.expected = poincare_series(a.poincare(), max_degree);
  r.holds = same_values(r.algebraic, r.expected);
  return r;
}

RelativeHilbertResult relative_hilbert_check(const Arrangement& a, std::size_t hyperplane, unsigned max_degree) {
  if (hyperplane >= a.n()) throw PreconditionError("hyperplane index out of range");
  RelativeHilbertResult r;
  r.degree_bound = max_degree;
  r.relative = relative_ot_hilbert(a, full_set(a.n()) & ~bit(hyperplane), max_degree);
  r.expected = poincare_series(projective_poincare(a.poincare()), max_degree);
  r.matches_projective = same_values(r.relative, r.expected);
  const auto full = ot_hilbert(a, max_degree);
  Integer partial = 0;
  r.exact_sequence = true;
  for (unsigned d = 0; d <= max_degree; ++d) {
    partial += r.relative[d];
    r.exact_sequence = r.exact_sequence && full[d] == partial;
  }
  r.holds = r.matches_projective && r.exact_sequence;
  return r;
}

RelativeInitialResult relative_initial_check(const Arrangement& a, std::size_t k, unsigned max_degree) {
  if (k < 1 || k > a.n()) throw PreconditionError("relative_initial_check needs 1 <= k <= n");
  const Subset kept = full_set(a.n()) & ~full_set(k - 1);
  RelativeInitialResult r;
  r.degree_bound = max_degree;
  r.algebraic = relative_ot_hilbert(a, kept, max_degree);
  r.combinatorial = sr_hilbert(bc_complex(a).restrict_to(kept), max_degree);
  r.holds = r.algebraic == r.combinatorial;
  return r;
}

KoszulNecessaryResult koszul_necessary(const Arrangement& a, unsigned max_degree) {
  const auto h = ot_hilbert(a, max_degree);
  std::vector<Rational> g(h.size());
  for (std::size_t d = 0; d < h.size(); ++d) g[d] = d % 2 ? Rational(-h[d]) : Rational(h[d]);
  KoszulNecessaryResult r;
  r.degree_bound = max_degree;
  r.inverse = series_expand(UniPoly::constant(1), UniPoly(g), max_degree);
  r.passes = std::all_of(r.inverse.begin(), r.inverse.end(), [](const Rational& c) { return c >= 0; });
  return r;
}

}  // namespace otalg
