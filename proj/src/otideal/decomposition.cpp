#include "otalg/otideal/decomposition.hpp"

#include "otalg/arrmat/fibre.hpp"
#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"
#include "otalg/otideal/graded.hpp"
#include "otalg/otideal/hilbert.hpp"
#include "otalg/otideal/relations.hpp"

namespace otalg {

FactorizationResult modular_factorization_check(const Arrangement& a, Subset flat, unsigned max_degree,
                                                std::uint64_t seed) {
  const auto& lat = a.lattice();
  if (lat.flat(lat.id_of(flat)).rank == 0) throw PreconditionError("modular_factorization_check needs a flat of positive rank");
  FactorizationResult r;
  r.degree_bound = max_degree;
  r.modular = is_modular(a, flat).modular;

  const auto res = restriction(a, flat);
  const Subset rest = full_set(a.n()) & ~flat;
  r.full = ot_hilbert(a, max_degree);
  r.restricted = ot_hilbert(res.arrangement, max_degree);
  r.relative = relative_ot_hilbert(a, rest, max_degree);
  r.hilbert_factors = true;
  for (unsigned d = 0; d <= max_degree; ++d) {
    Integer s = 0;
    for (unsigned e = 0; e <= d; ++e) s += r.restricted[e] * r.relative[d - e];
    r.hilbert_factors = r.hilbert_factors && s == r.full[d];
  }

  const auto t = principal_truncation(a, flat, 7, seed);
  const auto config = t.witness.configuration();
  r.truncation_poincare = poincare(FlatLattice(config));
  r.pi_factors = a.poincare() * UniPoly{1, 1} == res.arrangement.poincare() * r.truncation_poincare;

  // OT_X(A_v): the fibre's relations with y_0 set to zero.
  const auto fibre_circuits = config.circuits();
  r.fibre = graded_view(quotient_relations(fibre_circuits, config.size(), bit(0)), config.size() - 1, max_degree).hilbert;
  r.fibre_match = r.fibre == r.relative;
  r.fibre_inequality = true;
  for (unsigned d = 0; d <= max_degree; ++d) r.fibre_inequality = r.fibre_inequality && r.relative[d] >= r.fibre[d];

  const std::string where = " on " + subset_to_string(flat) + " of " + a.name();
  if (!r.fibre_inequality) throw InvariantViolation("fibre Hilbert function exceeds the relative one" + where);
  if (r.hilbert_factors != r.modular) throw InvariantViolation("Hilbert factorization disagrees with modularity" + where);
  if (r.pi_factors != r.modular) throw InvariantViolation("pi factorization disagrees with modularity" + where);
  if (r.fibre_match != r.modular) throw InvariantViolation("fibre Hilbert equality disagrees with modularity" + where);
  return r;
}

CoatomResult coatom_presentation_check(const Arrangement& a, Subset flat, unsigned max_degree) {
  const auto& lat = a.lattice();
  if (lat.flat(lat.id_of(flat)).rank + 1 != a.rank() || !is_modular(a, flat).modular)
    throw PreconditionError(subset_to_string(flat) + " is not a modular coatom");
  CoatomResult r;
  r.degree_bound = max_degree;

  const auto res = restriction(a, flat);
  std::vector<MultiPoly> gens;
  for (const auto& p : circuit_relations(res.arrangement)) gens.push_back(rename_variables(p, res.indices));

  const auto outside = elements_of(full_set(a.n()) & ~flat);
  for (std::size_t x = 0; x < outside.size(); ++x) {
    for (std::size_t y = x + 1; y < outside.size(); ++y) {
      CoatomQuadric q;
      q.i = outside[x];
      q.j = outside[y];
      const Subset meet = lat.closure(bit(q.i) | bit(q.j)) & flat;
      if (cardinality(meet) != 1)
        throw InvariantViolation("no unique i o j for " + subset_to_string(bit(q.i) | bit(q.j)));
      q.join = elements_of(meet).front();
      Matrix m(a.rank(), 2);
      for (std::size_t c = 0; c < a.rank(); ++c) {
        m(c, 0) = a.matrix()(q.i, c);
        m(c, 1) = a.matrix()(q.j, c);
      }
      const auto sol = solve(m, a.functional(q.join));
      if (!sol) throw InvariantViolation("f_{i o j} is not a combination of f_i and f_j");
      q.a = (*sol)[0];
      q.b = (*sol)[1];
      const auto yi = MultiPoly::variable(static_cast<Var>(q.i));
      const auto yj = MultiPoly::variable(static_cast<Var>(q.j));
      const auto yh = MultiPoly::variable(static_cast<Var>(q.join));
      q.quadric = yi * yj - yh * (yj * q.a + yi * q.b);
      gens.push_back(q.quadric);
      r.quadrics.push_back(std::move(q));
    }
  }

  const auto relations = circuit_relations(a);
  for (unsigned d = 2; d <= max_degree; ++d)
    if (!same_degree_span(gens, relations, a.n(), d)) r.failing_degrees.push_back(d);
  r.holds = r.failing_degrees.empty();
  return r;
}

}  // namespace otalg
