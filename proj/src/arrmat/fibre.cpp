#include "otalg/arrmat/fibre.hpp"

#include <map>
#include <random>

#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"

namespace otalg {

namespace {

struct Base {
  const Flat* flat;
  std::vector<std::size_t> basis;  // coordinates on V/X
  Matrix basis_rows;
};

Base base_of(const Arrangement& a, Subset flat) {
  const auto& lat = a.lattice();
  const Flat& x = lat.flat(lat.id_of(flat));
  if (x.rank == 0) throw PreconditionError("fibre over the bottom flat is undefined");
  Base b{&x, greedy_basis(a.configuration(), flat), {}};
  b.basis_rows = a.matrix().select_rows(b.basis);
  return b;
}

// A preimage of v, or nullopt if it lies on a hyperplane of A_X.
std::optional<Vector> lift_off_hyperplanes(const Arrangement& a, const Base& b, const Vector& v) {
  if (v.size() != b.basis.size())
    throw InvalidBasepoint("basepoint needs " + std::to_string(b.basis.size()) + " coordinates");
  auto lift = solve(b.basis_rows, v);
  if (!lift) throw InvariantViolation("basis functionals of a flat are dependent");
  for (auto i : elements_of(b.flat->mask))
    if (dot(a.functional(i), *lift) == 0) return std::nullopt;
  return lift;
}

bool same_direction(const std::vector<Integer>& p, const std::vector<Integer>& q) {
  if (p == q) return true;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != -q[j]) return false;
  return true;
}

Vector draw_point(std::mt19937_64& rng, std::size_t k, long height) {
  std::uniform_int_distribution<long> coord(-height, height);
  Vector v(k);
  for (auto& x : v) x = coord(rng);
  return v;
}

Vector draw_basepoint(const Arrangement& a, const Base& b, std::mt19937_64& rng, long height) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector v = draw_point(rng, b.basis.size(), height);
    if (lift_off_hyperplanes(a, b, v)) return v;
  }
  throw GenericityFailure("no basepoint off A_X found at height " + std::to_string(height));
}

}  // namespace

std::size_t FibreArrangement::distinct_hyperplanes() const {
  std::size_t collapsed = 0;
  for (const auto& cls : parallel_classes) collapsed += cls.size() - 1;
  return matrix.rows() - collapsed;
}

std::string FibreArrangement::label(std::size_t position) const {
  return position == 0 ? "0" : std::to_string(ground[position] + 1);
}

FibreArrangement fibre_arrangement(const Arrangement& a, Subset flat, const Vector& v) {
  const Base b = base_of(a, flat);
  if (is_zero_vector(v)) throw InvalidBasepoint("basepoint is zero");
  const auto lift = lift_off_hyperplanes(a, b, v);
  if (!lift) throw InvalidBasepoint("basepoint lies on a hyperplane of the restriction to " + subset_to_string(flat));

  FibreArrangement out;
  out.base = flat;
  out.basepoint = v;
  out.lift = *lift;
  out.ground.push_back(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    if (!contains(flat, i)) out.ground.push_back(i);

  const auto& xs = b.flat->subspace_basis;
  out.matrix = Matrix(out.ground.size(), xs.size() + 1);
  out.matrix(0, 0) = 1;
  for (std::size_t p = 1; p < out.ground.size(); ++p) {
    const Vector f = a.functional(out.ground[p]);
    out.matrix(p, 0) = dot(f, *lift);
    for (std::size_t j = 0; j < xs.size(); ++j) out.matrix(p, j + 1) = dot(f, xs[j]);
  }

  std::vector<std::vector<Integer>> prim;
  std::vector<bool> grouped(out.ground.size(), false);
  for (std::size_t p = 0; p < out.ground.size(); ++p) prim.push_back(primitive_integer_vector(out.matrix.row(p)));
  for (std::size_t p = 0; p < prim.size(); ++p) {
    if (grouped[p]) continue;
    std::vector<std::size_t> cls{p};
    for (std::size_t q = p + 1; q < prim.size(); ++q) {
      if (!grouped[q] && same_direction(prim[p], prim[q])) {
        cls.push_back(q);
        grouped[q] = true;
      }
    }
    if (cls.size() > 1) out.parallel_classes.push_back(std::move(cls));
  }
  return out;
}

Vector random_basepoint(const Arrangement& a, Subset flat, std::uint64_t seed, long height) {
  const Base b = base_of(a, flat);
  std::mt19937_64 rng(seed);
  return draw_basepoint(a, b, rng, height);
}

Truncation principal_truncation(const Arrangement& a, Subset flat, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw PreconditionError("principal_truncation needs at least one sample");
  const Base b = base_of(a, flat);
  std::mt19937_64 rng(seed);

  struct Tally {
    std::size_t count = 0;
    std::uint64_t independent = 0;
    std::optional<FibreArrangement> first;
  };
  long height = 10;
  for (int round = 0; round < 5; ++round, height *= 2) {
    std::map<std::vector<Subset>, Tally> tallies;
    for (std::size_t s = 0; s < samples; ++s) {
      auto fibre = fibre_arrangement(a, flat, draw_basepoint(a, b, rng, height));
      const auto config = fibre.configuration();
      std::vector<Subset> key;
      for (const auto& c : config.circuits()) key.push_back(c.mask);
      auto& t = tallies[key];
      if (t.count++ == 0) {
        t.independent = config.independent_count();
        t.first = std::move(fibre);
      }
    }
    // Specializing a point can only lose independent sets, so the generic
    // matroid is the one with the most.
    auto best = tallies.begin();
    for (auto it = tallies.begin(); it != tallies.end(); ++it)
      if (it->second.independent > best->second.independent) best = it;
    if (2 * best->second.count > samples) {
      Truncation out{std::move(*best->second.first), best->first, best->second.count, samples, height, seed};
      return out;
    }
  }
  throw GenericityFailure("no majority fibre matroid over " + subset_to_string(flat) + " (seed " +
                          std::to_string(seed) + ")");
}

bool truncation_lattice_check(const Arrangement& a, Subset flat, std::uint64_t seed) {
  if (!is_modular(a, flat).modular)
    throw PreconditionError(subset_to_string(flat) + " is not modular");
  const auto& lat = a.lattice();
  const std::size_t k = lat.flat(lat.id_of(flat)).rank;
  const Truncation t = principal_truncation(a, flat, 7, seed);

  std::vector<std::size_t> position(a.n(), 0);
  for (std::size_t p = 1; p < t.witness.ground.size(); ++p) position[t.witness.ground[p]] = p;
  auto to_positions = [&](Subset s) {
    Subset out = 0;
    for (auto i : elements_of(s)) out |= bit(position[i]);
    return out;
  };

  std::map<Subset, std::size_t> expected;
  for (const auto& y : lat.flats()) {
    if ((y.mask & flat) == 0)
      expected.emplace(to_positions(y.mask), y.rank);
    else if (is_subset(flat, y.mask))
      expected.emplace(to_positions(y.mask & ~flat) | bit(0), y.rank - k + 1);
  }
  std::map<Subset, std::size_t> actual;
  const FlatLattice tl(t.witness.configuration());
  for (const auto& f : tl.flats()) actual.emplace(f.mask, f.rank);
  return expected == actual;
}

}  // namespace otalg
