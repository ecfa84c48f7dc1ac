#include "otalg/otideal/fitting.hpp"

#include "otalg/errors.hpp"
#include "otalg/otideal/graded.hpp"
#include "otalg/otideal/relations.hpp"

namespace otalg {

FittingMatrix fitting_matrix(const Arrangement& a, Subset flat) {
  const auto& lat = a.lattice();
  const std::size_t k = lat.flat(lat.id_of(flat)).rank;
  const std::size_t nx = cardinality(flat);
  if (k < 1 || nx <= k) throw PreconditionError("fitting_matrix needs n_X > rank(X) >= 1 on " + subset_to_string(flat));
  const auto res = restriction(a, flat);
  const Matrix& m = res.arrangement.matrix();
  FittingMatrix fm;
  fm.flat = flat;
  fm.rank = k;
  fm.last = res.indices.back();
  const std::size_t mrow = nx - 1;
  for (std::size_t i = 0; i + 1 < nx; ++i) {
    fm.rows.push_back(res.indices[i]);
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < k; ++j) {
      MultiPoly e = MultiPoly::variable(static_cast<Var>(res.indices[i])) * m(i, j);
      e -= MultiPoly::variable(static_cast<Var>(fm.last)) * m(mrow, j);
      row.push_back(std::move(e));
    }
    fm.entries.push_back(std::move(row));
  }
  return fm;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw DimensionMismatch("determinant of a non-square polynomial matrix");
  if (k == 0) return MultiPoly(Rational(1));
  if (k == 1) return m[0][0];
  MultiPoly det;
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][j] * determinant(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

FittingResult fitting_check(const Arrangement& a, Subset flat) {
  const auto fm = fitting_matrix(a, flat);
  const std::size_t k = fm.rank;

  std::vector<MultiPoly> minors;
  const std::size_t rows = fm.entries.size();
  for (Subset pick = 0; pick < (Subset{1} << rows); ++pick) {
    if (cardinality(pick) != k) continue;
    std::vector<std::vector<MultiPoly>> sub;
    for (auto i : elements_of(pick)) sub.push_back(fm.entries[i]);
    minors.push_back(determinant(sub));
  }

  std::vector<MultiPoly> relations;
  for (const auto& c : a.circuits()) {
    if (a.lattice().closure(c.mask) != flat) continue;
    if (c.size() != k + 1) throw InvariantViolation("circuit spanning " + subset_to_string(flat) + " has the wrong size");
    relations.push_back(circuit_relation(c));
  }

  std::vector<MultiPoly> fundamental;
  const auto& lat = a.lattice();
  for (Subset r = flat; r != 0; r = (r - 1) & flat) {
    if (cardinality(r) != k + 1 || lat.closure(r) != flat) continue;
    for (const auto& c : a.circuits()) {
      if (!is_subset(c.mask, r)) continue;
      MultiPoly p = circuit_relation(c);
      for (auto j : elements_of(r & ~c.mask)) p = p * MultiPoly::variable(static_cast<Var>(j));
      fundamental.push_back(std::move(p));
    }
  }

  // Only the variables of [X] occur; renumber them to keep the basis small.
  const auto vm = surviving_variables(a.n(), full_set(a.n()) & ~flat);
  std::vector<std::size_t> to_local(a.n(), 0);
  for (std::size_t i = 0; i < a.n(); ++i)
    if (vm.new_of[i] >= 0) to_local[i] = static_cast<std::size_t>(vm.new_of[i]);
  for (auto& p : minors) p = rename_variables(p, to_local);
  for (auto& p : relations) p = rename_variables(p, to_local);
  for (auto& p : fundamental) p = rename_variables(p, to_local);

  FittingResult r;
  r.minors = minors.size();
  r.relations = relations.size();
  const auto d = static_cast<unsigned>(k);
  r.minors_rank = degree_rank(minors, vm.size(), d);
  r.relations_rank = degree_rank(relations, vm.size(), d);
  r.holds = same_degree_span(minors, relations, vm.size(), d);
  r.fundamental_rank = degree_rank(fundamental, vm.size(), d);
  r.fundamental_match = same_degree_span(minors, fundamental, vm.size(), d);
  return r;
}

}  // namespace otalg
