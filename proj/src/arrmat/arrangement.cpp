#include "otalg/arrmat/arrangement.hpp"

#include <mutex>
#include <optional>

#include "otalg/errors.hpp"

namespace otalg {

struct Arrangement::Derived {
  std::once_flag lattice_once, circuits_once, poincare_once;
  std::optional<FlatLattice> lattice;
  std::vector<Circuit> circuits;
  UniPoly poincare;
};

namespace {

using Reason = InvalidArrangement::Reason;

bool proportional(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  // Primitive integer vectors are proportional iff equal up to sign.
  if (a == b) return true;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != -b[j]) return false;
  return true;
}

}  // namespace

Arrangement::Arrangement(Matrix m, std::string name) : name_(std::move(name)) {
  if (m.rows() == 0 || m.cols() == 0) throw InvalidArrangement(Reason::Empty, "arrangement has no hyperplanes");
  config_ = VectorConfiguration(std::move(m));
  std::vector<std::vector<Integer>> prim;
  for (std::size_t i = 0; i < n(); ++i) {
    prim.push_back(primitive_integer_vector(config_.row(i)));
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(prim[j], prim[i]))
        throw InvalidArrangement(Reason::ProportionalRows,
                                 "rows " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are proportional");
    }
  }
  const std::size_t r = config_.rank();
  if (r < rank())
    throw InvalidArrangement(Reason::NotEssential, "rows span rank " + std::to_string(r) + " in dimension " +
                                                       std::to_string(rank()) + " (not essential)");
  derived_ = std::make_shared<Derived>();
}

Arrangement Arrangement::from_rows(const std::vector<Vector>& rows, std::string name) {
  if (rows.empty()) throw InvalidArrangement(Reason::Empty, "arrangement has no hyperplanes");
  try {
    return Arrangement(Matrix(rows), std::move(name));
  } catch (const DimensionMismatch& e) {
    throw InvalidArrangement(Reason::Ragged, e.what());
  }
}

const FlatLattice& Arrangement::lattice() const& {
  std::call_once(derived_->lattice_once, [&] { derived_->lattice.emplace(config_); });
  return *derived_->lattice;
}

const std::vector<Circuit>& Arrangement::circuits() const& {
  std::call_once(derived_->circuits_once, [&] { derived_->circuits = config_.circuits(); });
  return derived_->circuits;
}

const UniPoly& Arrangement::poincare() const& {
  std::call_once(derived_->poincare_once, [&] {
    derived_->poincare = otalg::poincare(lattice());
    projective_poincare(derived_->poincare);
  });
  return derived_->poincare;
}

std::vector<std::size_t> greedy_basis(const VectorConfiguration& config, Subset s) {
  std::vector<std::size_t> basis;
  Subset acc = 0;
  for (auto i : elements_of(s)) {
    if (config.rank(acc | bit(i)) == basis.size() + 1) {
      acc |= bit(i);
      basis.push_back(i);
    }
  }
  return basis;
}

Matrix essentialize(const Matrix& m) {
  const VectorConfiguration config(m);
  const auto basis = greedy_basis(config, full_set(m.rows()));
  const Matrix bt = m.select_rows(basis).transpose();
  Matrix out(m.rows(), basis.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto c = solve(bt, m.row(i));
    if (!c) throw InvariantViolation("row outside the span of a basis of all rows");
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = (*c)[j];
  }
  return out;
}

Restriction restriction(const Arrangement& a, Subset flat) {
  const auto& lat = a.lattice();
  const std::size_t id = lat.id_of(flat);
  if (lat.flat(id).rank == 0) throw InvalidArrangement(Reason::Empty, "restriction to the bottom flat is empty");
  const auto& config = a.configuration();
  Restriction out{Arrangement(essentialize(config.rows_of(flat)), a.name().empty() ? "" : a.name() + "|" + subset_to_string(flat)),
                  elements_of(flat), {}};
  // essentialize picks the greedy basis of the rows of [X]; record it in
  // original indices.
  for (auto k : greedy_basis(VectorConfiguration(config.rows_of(flat)), full_set(cardinality(flat))))
    out.basis.push_back(out.indices[k]);
  return out;
}

}  // namespace otalg
