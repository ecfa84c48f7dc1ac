#include "otalg/otideal/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "otalg/errors.hpp"
#include "otalg/otideal/graded.hpp"
#include "otalg/otideal/relations.hpp"

namespace otalg {

TermOrder random_lex_order(std::size_t nvars, std::uint64_t seed) {
  std::vector<Var> prio(nvars);
  std::iota(prio.begin(), prio.end(), Var{0});
  std::mt19937_64 rng(seed);
  std::shuffle(prio.begin(), prio.end(), rng);
  return TermOrder(TermOrder::Kind::Lex, std::move(prio));
}

namespace {

bool packed_divides(PackedMonomial a, PackedMonomial b, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v)
    if (packed_exponent(a, v) > packed_exponent(b, v)) return false;
  return true;
}

}  // namespace

GroebnerResult groebner_degree_check(const Arrangement& a, const TermOrder& order, unsigned max_degree) {
  const std::size_t n = a.n();
  if (order.nvars() != n) throw PreconditionError("term order has the wrong number of variables");
  GroebnerResult r;
  r.degree_bound = max_degree;
  r.ground_order = order.induced_ground_order();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[r.ground_order[k]] = k;

  std::vector<PackedMonomial> leads;
  for (const auto& c : a.circuits()) {
    const auto lt = circuit_relation(c).leading_term(order).first;
    const auto least = *std::min_element(c.support.begin(), c.support.end(),
                                         [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
    std::vector<Var> vars;
    for (auto j : c.support)
      if (j != least) vars.push_back(static_cast<Var>(j));
    if (lt != Monomial::product_of(vars))
      throw ConventionMismatch("leading term " + lt.to_string() + " of the relation on " + subset_to_string(c.mask) +
                               " is not its broken-circuit monomial");
    leads.push_back(pack(lt));
  }

  GradedOptions opts;
  opts.order = order;
  opts.keep_leading = true;
  const auto view = graded_view(circuit_relations(a), n, max_degree, opts);
  const auto sr = sr_hilbert(bc_complex(a, r.ground_order), max_degree);

  r.dims_match = r.initial_match = r.sr_match = true;
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<PackedMonomial> in_m;
    for (PackedMonomial m : MonomialBasis::enumerate(n, d))
      if (std::any_of(leads.begin(), leads.end(), [&](PackedMonomial l) { return packed_divides(l, m, n); }))
        in_m.push_back(m);
    std::sort(in_m.begin(), in_m.end());
    r.monomial_dims.push_back(in_m.size());
    r.ideal_dims.push_back(view.ideal_dims[d]);
    r.dims_match = r.dims_match && in_m.size() == view.ideal_dims[d];
    r.initial_match = r.initial_match && in_m == view.leading[d];
    r.sr_match = r.sr_match && Integer(in_m.size()) == monomial_count(n, d) - sr[d];
  }
  r.holds = r.dims_match && r.initial_match && r.sr_match;
  return r;
}

}  // namespace otalg
