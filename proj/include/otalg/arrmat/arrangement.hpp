#ifndef OTALG_ARRMAT_ARRANGEMENT_HPP
#define OTALG_ARRMAT_ARRANGEMENT_HPP

#include <memory>
#include <string>
#include <vector>

#include "otalg/arrmat/configuration.hpp"
#include "otalg/arrmat/lattice.hpp"

namespace otalg {

// A central essential arrangement: rows of the matrix are the defining
// functionals, pairwise non-proportional, spanning the dual space.
//
// Copies share a lazily built lattice and circuit list; both are computed
// at most once and never change afterwards.
class Arrangement {
 public:
  // Validates and throws InvalidArrangement naming the failed invariant.
  explicit Arrangement(Matrix m, std::string name = {});
  // Same, but ragged rows are reported as InvalidArrangement too.
  static Arrangement from_rows(const std::vector<Vector>& rows, std::string name = {});

  std::size_t n() const { return config_.size(); }
  std::size_t rank() const { return config_.dim(); }
  const Matrix& matrix() const { return config_.matrix(); }
  Vector functional(std::size_t i) const { return config_.row(i); }
  const VectorConfiguration& configuration() const { return config_; }
  const std::string& name() const { return name_; }

  const FlatLattice& lattice() const&;
  const std::vector<Circuit>& circuits() const&;
  const UniPoly& poincare() const&;
  // On temporaries these copy, so chained calls never dangle.
  FlatLattice lattice() const&& { return lattice(); }
  std::vector<Circuit> circuits() const&& { return circuits(); }
  UniPoly poincare() const&& { return poincare(); }

 private:
  struct Derived;

  VectorConfiguration config_;
  std::string name_;
  std::shared_ptr<Derived> derived_;
};

// Rows re-expressed in a basis of their span: the result has full column
// rank and the same matroid.
Matrix essentialize(const Matrix& m);

// Indices of the first maximal independent subfamily of rows in s.
std::vector<std::size_t> greedy_basis(const VectorConfiguration& config, Subset s);

// A_X as an arrangement of rank rho(X) in V/X. Coordinates on V/X are the
// values of the functionals in `basis` (a greedy basis of [X]).
struct Restriction {
  Arrangement arrangement;
  std::vector<std::size_t> indices;  // original index of each row
  std::vector<std::size_t> basis;    // original indices giving coordinates
};

// Throws InvalidArrangement(Empty) for the bottom flat, PreconditionError if
// the mask is not a flat.
Restriction restriction(const Arrangement& a, Subset flat);

}  // namespace otalg

#endif  // OTALG_ARRMAT_ARRANGEMENT_HPP
