#include "otalg/otideal/quadratic.hpp"

#include <algorithm>
#include <numeric>

#include "otalg/arrmat/hypergraph.hpp"
#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"
#include "otalg/otideal/graded.hpp"
#include "otalg/otideal/relations.hpp"

namespace otalg {

std::string to_string(QuadraticMethod m) {
  switch (m) {
    case QuadraticMethod::Auto: return "auto";
    case QuadraticMethod::LinearAlgebra: return "linear-algebra";
    case QuadraticMethod::InitialIdeal: return "initial-ideal";
  }
  return "?";
}

namespace {

bool certifies(const Arrangement& a, const GroundOrder& order) {
  const std::size_t n = a.n();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  std::vector<Var> prio;
  for (auto it = order.rbegin(); it != order.rend(); ++it) prio.push_back(static_cast<Var>(*it));
  const TermOrder lex(TermOrder::Kind::Lex, prio);

  std::vector<Subset> broken, broken3;
  for (const auto& c : a.circuits()) {
    const auto least = *std::min_element(c.support.begin(), c.support.end(),
                                         [&](std::size_t x, std::size_t y) { return position[x] < position[y]; });
    const Subset b = c.mask & ~bit(least);
    std::vector<Var> vars;
    for (auto j : elements_of(b)) vars.push_back(static_cast<Var>(j));
    if (circuit_relation(c).leading_term(lex).first != Monomial::product_of(vars))
      throw ConventionMismatch("lex leading term is not the broken circuit on " + subset_to_string(c.mask));
    broken.push_back(b);
    if (c.size() == 3) broken3.push_back(b);
  }
  return std::all_of(broken.begin(), broken.end(), [&](Subset b) {
    return std::any_of(broken3.begin(), broken3.end(), [&](Subset q) { return is_subset(q, b); });
  });
}

void run_linear_algebra(const Arrangement& a, QuadraticResult& r) {
  const auto all = circuit_relations(a);
  std::vector<MultiPoly> quad;
  for (const auto& c : a.circuits())
    if (c.size() == 3) quad.push_back(circuit_relation(c));
  r.method = QuadraticMethod::LinearAlgebra;
  r.quadratic = true;
  for (unsigned d = 2; d <= r.degree_bound; ++d) {
    const auto di = degree_rank(all, a.n(), d);
    const auto dq = degree_rank(quad, a.n(), d);
    r.ideal_dims.push_back(di);
    r.quadric_dims.push_back(dq);
    if (di != dq) {
      r.quadratic = false;
      r.failing_degree = d;
      return;
    }
  }
}

}  // namespace

std::optional<GroundOrder> quadratic_certificate_order(const Arrangement& a) {
  const auto natural = natural_order(a.n());
  if (certifies(a, natural)) return natural;
  if (const auto chain = supersolvable_chain(a)) {
    GroundOrder order;
    Subset seen = 0;
    for (Subset x : chain->chain) {
      for (auto e : elements_of(x & ~seen)) order.push_back(e);
      seen |= x;
    }
    if (certifies(a, order)) return order;
  }
  return std::nullopt;
}

QuadraticResult is_quadratic(const Arrangement& a, QuadraticMethod method) {
  QuadraticResult r;
  r.degree_bound = static_cast<unsigned>(a.rank());
  std::vector<MultiPoly> quad;
  for (const auto& c : a.circuits())
    if (c.size() == 3) quad.push_back(circuit_relation(c));
  r.quadrics = degree_rank(quad, a.n(), 2);

  const bool affordable = monomial_count(a.n(), r.degree_bound) <= kQuadraticLinearBudget;
  if (method == QuadraticMethod::LinearAlgebra || (method == QuadraticMethod::Auto && affordable)) {
    run_linear_algebra(a, r);
    return r;
  }
  if (auto order = quadratic_certificate_order(a)) {
    r.method = QuadraticMethod::InitialIdeal;
    r.quadratic = true;
    r.certificate_order = std::move(*order);
    return r;
  }
  if (!affordable)
    throw PreconditionError("no quadratic certificate for " + a.name() + " and linear algebra is over budget");
  run_linear_algebra(a, r);
  return r;
}

TwoFormalResult is_2formal(const Arrangement& a) {
  TwoFormalResult r;
  r.relation_dim = nullspace(a.matrix().transpose()).size();
  std::vector<Vector> triples;
  for (const auto& c : a.circuits()) {
    if (c.size() != 3) continue;
    Vector v(a.n(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) v[c.support[k]] = c.coeffs[k];
    triples.push_back(std::move(v));
  }
  r.triple_rank = exact_rank(triples);
  r.formal = r.triple_rank == r.relation_dim;
  return r;
}

QciResult qci_check(const Arrangement& a) {
  const long n = static_cast<long>(a.n()), l = static_cast<long>(a.rank());
  QciResult r;
  r.quadratic_detail = is_quadratic(a);
  r.quadratic = r.quadratic_detail.quadratic;
  r.quadratic_ci = r.quadratic && static_cast<long>(r.quadratic_detail.quadrics) == n - l;

  const auto& lat = a.lattice();
  const auto hg = rank2_hypergraph(a);
  bool small_lines = true;
  for (auto id : lat.of_rank(2)) small_lines = small_lines && lat.flat(id).size() <= 3;
  r.mu_bound_and_count_raw = small_lines && static_cast<long>(hg.triple_count) == n - l;

  if (2 * l >= n) {
    const auto expected = UniPoly::linear_power(1, 1, static_cast<unsigned>(2 * l - n)) *
                          UniPoly::linear_power(1, 2, static_cast<unsigned>(n - l));
    r.pi_form_raw = a.poincare() == expected;
  }
  r.mu_bound_and_count = r.quadratic && r.mu_bound_and_count_raw;
  r.pi_form = r.quadratic && r.pi_form_raw;

  if (const auto chain = supersolvable_chain(a))
    r.ss_exponents12 = std::all_of(chain->exponents.begin(), chain->exponents.end(),
                                   [](std::size_t e) { return e == 1 || e == 2; });
  r.lineclosed_3forest = hg.is_3forest && is_line_closed(a);

  r.qci = r.quadratic_ci;
  const bool agree = r.mu_bound_and_count == r.qci && r.pi_form == r.qci && r.ss_exponents12 == r.qci &&
                     r.lineclosed_3forest == r.qci;
  if (!agree) {
    auto b = [](bool x) { return std::string(x ? "1" : "0"); };
    throw InvariantViolation("q.c.i. conditions disagree on " + a.name() + ": " + b(r.quadratic_ci) +
                             b(r.mu_bound_and_count) + b(r.pi_form) + b(r.ss_exponents12) + b(r.lineclosed_3forest));
  }
  return r;
}

}  // namespace otalg
