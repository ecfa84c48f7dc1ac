#ifndef OTALG_OTIDEAL_GRADED_HPP
#define OTALG_OTIDEAL_GRADED_HPP

#include <optional>
#include <span>
#include <vector>

#include "otalg/exactcore/monomial_basis.hpp"
#include "otalg/exactcore/multipoly.hpp"

namespace otalg {

struct GradedOptions {
  // Column order of the Macaulay matrices; grevlex with y_n first if unset.
  std::optional<TermOrder> order;
  // Record the leading monomials of I_d under that order, i.e. in(I)_d.
  bool keep_leading = false;
};

// Degreewise data of a homogeneous ideal I of S = K[y_0..y_{nvars-1}],
// I_d = span{ m*g : g a generator, deg m + deg g = d }.
struct GradedIdealView {
  std::size_t nvars = 0;
  unsigned max_degree = 0;
  std::vector<MultiPoly> generators;
  std::vector<std::size_t> ideal_dims;  // dim I_d, d = 0..max_degree
  std::vector<Integer> hilbert;         // dim (S/I)_d
  std::vector<std::vector<PackedMonomial>> leading;
  bool big_integers = false;  // some degree needed the GMP rerun
};

// PreconditionError for a non-homogeneous or out-of-range generator, or past
// the packed limits (16 variables, degree 15). Zero generators are dropped.
GradedIdealView graded_view(std::vector<MultiPoly> generators, std::size_t nvars, unsigned max_degree,
                            const GradedOptions& options = {});

// dim S_d.
Integer monomial_count(std::size_t nvars, unsigned d);

// dim of the degree-d part of the ideal generated by `generators`.
std::size_t degree_rank(std::span<const MultiPoly> generators, std::size_t nvars, unsigned d);

// Whether both families generate the same degree-d subspace.
bool same_degree_span(std::span<const MultiPoly> a, std::span<const MultiPoly> b, std::size_t nvars, unsigned d);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_GRADED_HPP
