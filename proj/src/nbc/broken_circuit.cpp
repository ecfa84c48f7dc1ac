#include "otalg/nbc/broken_circuit.hpp"

#include <numeric>

#include "otalg/arrmat/fibre.hpp"
#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"

namespace otalg {

GroundOrder natural_order(std::size_t n) {
  GroundOrder o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

GroundOrder flat_first_order(std::size_t n, Subset flat) {
  GroundOrder o = elements_of(flat);
  for (auto e : elements_of(full_set(n) & ~flat)) o.push_back(e);
  return o;
}

SimplicialComplex bc_complex(std::size_t n, std::size_t rank, std::span<const Subset> circuits,
                             const GroundOrder& order) {
  if (order.size() != n) throw PreconditionError("ground order has the wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || position[order[k]] != n) throw PreconditionError("ground order is not a permutation");
    position[order[k]] = k;
  }
  // Broken circuits, filed under each of their elements.
  std::vector<std::vector<Subset>> broken_at(n);
  for (Subset c : circuits) {
    std::size_t least = n;
    for (auto e : elements_of(c))
      if (least == n || position[e] < position[least]) least = e;
    const Subset b = c & ~bit(least);
    for (auto e : elements_of(b)) broken_at[e].push_back(b);
  }

  std::vector<Subset> faces;
  auto grow = [&](auto&& self, Subset face, std::size_t next) -> void {
    faces.push_back(face);
    for (std::size_t j = next; j < n; ++j) {
      const Subset s = face | bit(j);
      bool ok = true;
      for (Subset b : broken_at[j]) {
        if (is_subset(b, s)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, s, j + 1);
    }
  };
  grow(grow, 0, 0);

  SimplicialComplex out(n, std::move(faces));
  if (out.max_face_size() != rank || !out.is_pure())
    throw InvariantViolation("broken circuit complex is not pure with facets of size " + std::to_string(rank));
  return out;
}

SimplicialComplex bc_complex(const Arrangement& a, const GroundOrder& order) {
  std::vector<Subset> masks;
  for (const auto& c : a.circuits()) masks.push_back(c.mask);
  return bc_complex(a.n(), a.rank(), masks, order);
}

SimplicialComplex bc_complex(const Arrangement& a) { return bc_complex(a, natural_order(a.n())); }

SimplicialComplex reduced_bc_complex(const Arrangement& a, const GroundOrder& order) {
  const auto bc = bc_complex(a, order);
  const std::size_t e = order.front();
  auto reduced = bc.deletion(e);
  if (reduced.cone(e) != bc) throw InvariantViolation("broken circuit complex is not a cone over its reduction");
  if (reduced.max_face_size() + 1 != a.rank() || !reduced.is_pure())
    throw InvariantViolation("reduced broken circuit complex is not pure with facets of size rank - 1");
  return reduced;
}

SimplicialComplex reduced_bc_complex(const Arrangement& a) { return reduced_bc_complex(a, natural_order(a.n())); }

BcModularResult bc_modular_check(const Arrangement& a, Subset flat, std::uint64_t seed) {
  const auto& lat = a.lattice();
  if (lat.flat(lat.id_of(flat)).rank == 0) throw PreconditionError("bc_modular_check needs a flat of positive rank");
  const auto bc = bc_complex(a, flat_first_order(a.n(), flat));

  const Truncation t = principal_truncation(a, flat, 7, seed);
  const auto config = t.witness.configuration();
  const std::size_t m = config.size();
  const auto bc0 = bc_complex(m, config.rank(), t.circuits, natural_order(m)).deletion(0);

  std::vector<std::size_t> position(a.n(), 0);
  for (std::size_t p = 1; p < m; ++p) position[t.witness.ground[p]] = p;
  std::vector<Subset> restricted;
  const auto outside = bc.restrict_to(full_set(a.n()) & ~flat);
  for (Subset f : outside.faces()) {
    Subset g = 0;
    for (auto e : elements_of(f)) g |= bit(position[e]);
    restricted.push_back(g);
  }
  const SimplicialComplex rest(m, std::move(restricted));

  BcModularResult r;
  r.subcomplex = true;
  for (Subset f : bc0.faces()) r.subcomplex = r.subcomplex && rest.contains(f);
  r.equal = bc0 == rest;
  r.modular = is_modular(a, flat).modular;
  if (!r.subcomplex)
    throw InvariantViolation("bc0 of the truncation over " + subset_to_string(flat) + " is not a subcomplex");
  if (r.equal != r.modular)
    throw InvariantViolation("bc equality and modularity disagree on " + subset_to_string(flat));
  return r;
}

bool join_decomposition_check(const Arrangement& a, Subset flat) {
  a.lattice().id_of(flat);
  const auto bc = bc_complex(a, flat_first_order(a.n(), flat));
  const bool splits = bc == join(bc.restrict_to(flat), bc.restrict_to(full_set(a.n()) & ~flat));
  if (splits != is_modular(a, flat).modular)
    throw InvariantViolation("join decomposition and modularity disagree on " + subset_to_string(flat));
  return splits;
}

}  // namespace otalg
