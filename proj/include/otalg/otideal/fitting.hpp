#ifndef OTALG_OTIDEAL_FITTING_HPP
#define OTALG_OTIDEAL_FITTING_HPP

#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/exactcore/multipoly.hpp"

namespace otalg {

// Rows are the hyperplanes of [X] but the last one (call it m); entry (i, j)
// is (d_j f_i) y_i - (d_j f_m) y_m in coordinates x_1..x_k on V/X.
struct FittingMatrix {
  Subset flat = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> rows;  // original index of each row
  std::size_t last = 0;           // m
  std::vector<std::vector<MultiPoly>> entries;
};

// PreconditionError unless n_X > rank(X) >= 1.
FittingMatrix fitting_matrix(const Arrangement& a, Subset flat);

// Laplace expansion; the matrix must be square.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

struct FittingResult {
  bool holds = false;
  std::size_t minors = 0;
  std::size_t relations = 0;  // circuits C with cl(C) = [X]
  std::size_t minors_rank = 0;
  std::size_t relations_rank = 0;
  // Minors against prod_{R - C} y_j * r_C over R in [X] with |R| = k + 1 and
  // cl(R) = [X], C the unique circuit in R. These are the maximal minors of
  // the matrix before the last row is subtracted, so this always holds.
  bool fundamental_match = false;
  std::size_t fundamental_rank = 0;
};

// Span equality, in degree rank(X), of the maximal minors of the Fitting
// matrix and the relations r_C with cl(C) = [X]. Fails whenever some R as
// above contains a smaller circuit, e.g. the top flat of A3: the minors pick up
// y_h r_C for 3-circuits C.
FittingResult fitting_check(const Arrangement& a, Subset flat);

}  // namespace otalg

#endif  // OTALG_OTIDEAL_FITTING_HPP
