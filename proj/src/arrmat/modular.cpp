#include "otalg/arrmat/modular.hpp"

#include "otalg/errors.hpp"

namespace otalg {

namespace {

bool subspace_sum_criterion(const FlatLattice& lat, const Flat& x) {
  const auto& config = lat.configuration();
  const std::size_t dim = config.dim();
  for (const auto& y : lat.flats()) {
    std::vector<Vector> gens = x.subspace_basis;
    gens.insert(gens.end(), y.subspace_basis.begin(), y.subspace_basis.end());
    const std::size_t dim_sum = exact_rank(gens);
    // Hyperplanes containing X+Y; the sum is in L(A) iff their common zero
    // set is no bigger than the sum itself.
    Subset vanish = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
      const Vector f = config.row(i);
      bool all_zero = true;
      for (const auto& g : gens) {
        if (dot(f, g) != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) vanish |= bit(i);
    }
    if (dim - config.rank(vanish) != dim_sum) return false;
  }
  return true;
}

bool rank_identity_criterion(const FlatLattice& lat, const Flat& x) {
  const auto& config = lat.configuration();
  for (const auto& y : lat.flats()) {
    const std::size_t join = config.rank(x.mask | y.mask);
    const std::size_t meet = config.rank(x.mask & y.mask);
    if (x.rank + y.rank != join + meet) return false;
  }
  return true;
}

// X is modular iff every circuit C leaving [X] has (C - [X]) + q dependent
// for some q in [X]. The bottom flat is modular outright.
bool short_circuit_criterion(const FlatLattice& lat, const std::vector<Circuit>& circuits, const Flat& x) {
  if (x.mask == 0) return true;
  const auto& config = lat.configuration();
  for (const auto& c : circuits) {
    const Subset rest = c.mask & ~x.mask;
    if (rest == 0) continue;
    bool found = false;
    for (auto q : elements_of(x.mask)) {
      if (!config.is_independent(rest | bit(q))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

ModularityVerdict is_modular(const Arrangement& a, Subset flat) {
  const auto& lat = a.lattice();
  const Flat& x = lat.flat(lat.id_of(flat));
  ModularityVerdict v;
  v.subspace_sum = subspace_sum_criterion(lat, x);
  v.rank_identity = rank_identity_criterion(lat, x);
  v.short_circuit = short_circuit_criterion(lat, a.circuits(), x);
  if (v.subspace_sum != v.rank_identity || v.rank_identity != v.short_circuit)
    throw InvariantViolation("modularity criteria disagree on " + subset_to_string(flat));
  v.modular = v.rank_identity;
  return v;
}

bool is_modular_by_rank(const FlatLattice& lattice, std::size_t flat_id) {
  return rank_identity_criterion(lattice, lattice.flat(flat_id));
}

std::optional<SupersolvableChain> supersolvable_chain(const Arrangement& a) {
  const auto& lat = a.lattice();
  const std::size_t l = lat.rank();
  std::vector<signed char> memo(lat.size(), -1);
  auto modular = [&](std::size_t id) {
    if (memo[id] < 0) memo[id] = is_modular_by_rank(lat, id) ? 1 : 0;
    return memo[id] == 1;
  };

  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t below) -> bool {
    if (chain.size() == l) return true;
    for (std::size_t id : lat.of_rank(chain.size() + 1)) {
      if (!lat.leq(below, id) || !modular(id)) continue;
      chain.push_back(id);
      if (self(self, id)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend(extend, lat.bottom())) return std::nullopt;

  SupersolvableChain out;
  UniPoly product = UniPoly::constant(1);
  std::size_t prev = 0;
  for (std::size_t id : chain) {
    const Flat& f = lat.flat(id);
    out.chain.push_back(f.mask);
    out.exponents.push_back(f.size() - prev);
    product = product * UniPoly{1, static_cast<long>(f.size() - prev)};
    prev = f.size();
  }
  if (product != a.poincare())
    throw InvariantViolation("supersolvable exponents do not factor the Poincare polynomial of " + a.name());
  return out;
}

}  // namespace otalg
