#include "otalg/otideal/relations.hpp"

#include "otalg/errors.hpp"

namespace otalg {

namespace {

Monomial product_except(const std::vector<std::size_t>& support, std::size_t skip) {
  std::vector<Var> vars;
  for (auto j : support)
    if (j != skip) vars.push_back(static_cast<Var>(j));
  return Monomial::product_of(vars);
}

}  // namespace

MultiPoly circuit_relation(const Circuit& c) {
  if (c.size() < 3) throw PreconditionError("circuit relations need a support of size at least 3");
  MultiPoly r;
  for (std::size_t k = 0; k < c.size(); ++k) r += MultiPoly(product_except(c.support, c.support[k]), c.coeffs[k]);
  return r;
}

MultiPoly relative_relation(const Circuit& c, std::size_t i) {
  if (c.size() < 3) throw PreconditionError("circuit relations need a support of size at least 3");
  if (!contains(c.mask, i)) return circuit_relation(c);
  return MultiPoly(product_except(c.support, i));
}

std::vector<MultiPoly> circuit_relations(std::span<const Circuit> circuits) {
  std::vector<MultiPoly> out;
  out.reserve(circuits.size());
  for (const auto& c : circuits) out.push_back(circuit_relation(c));
  return out;
}

std::vector<MultiPoly> circuit_relations(const Arrangement& a) { return circuit_relations(a.circuits()); }

VariableMap surviving_variables(std::size_t n, Subset killed) {
  VariableMap m;
  m.new_of.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(killed, i)) continue;
    m.new_of[i] = static_cast<std::int32_t>(m.kept.size());
    m.kept.push_back(i);
  }
  return m;
}

MultiPoly rename_variables(const MultiPoly& p, std::span<const std::size_t> map) {
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Var> vars;
    for (const auto& f : mono.factors())
      for (unsigned e = 0; e < f.exp; ++e) vars.push_back(static_cast<Var>(map[f.var]));
    out += MultiPoly(Monomial::product_of(vars), coeff);
  }
  return out;
}

std::vector<MultiPoly> quotient_relations(std::span<const Circuit> circuits, std::size_t n, Subset killed) {
  const auto vm = surviving_variables(n, killed);
  std::vector<std::size_t> to_new(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (vm.new_of[i] >= 0) to_new[i] = static_cast<std::size_t>(vm.new_of[i]);
  std::vector<MultiPoly> out;
  for (const auto& c : circuits) {
    const Subset hit = c.mask & killed;
    if (cardinality(hit) >= 2) continue;
    const MultiPoly r = hit ? relative_relation(c, elements_of(hit).front()) : circuit_relation(c);
    out.push_back(rename_variables(r, to_new));
  }
  return out;
}

}  // namespace otalg
