#ifndef OTALG_ARRMAT_FIBRE_HPP
#define OTALG_ARRMAT_FIBRE_HPP

#include <cstdint>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"

namespace otalg {

// Fibre arrangement over a point v of V/X, living in A^1 x X with
// coordinates (t, x_1..x_{l-k}). Position 0 is the new element (printed as
// "0"); position p > 0 is the original hyperplane ground[p].
struct FibreArrangement {
  Subset base = 0;           // [X]
  Vector basepoint;          // v, in the coordinates of the restriction basis
  Vector lift;               // a preimage of v in V
  std::vector<std::size_t> ground;  // ground[0] is unused (the apex)
  Matrix matrix;
  // Groups of positions whose rows are proportional; only groups of size >= 2.
  std::vector<std::vector<std::size_t>> parallel_classes;

  bool degenerate() const { return !parallel_classes.empty(); }
  std::size_t distinct_hyperplanes() const;
  VectorConfiguration configuration() const { return VectorConfiguration(matrix); }
  // "0" for the apex, otherwise the 1-based original label.
  std::string label(std::size_t position) const;
};

// PreconditionError unless flat is a flat of positive rank; InvalidBasepoint
// if v has the wrong length or lies on a hyperplane of A_X.
FibreArrangement fibre_arrangement(const Arrangement& a, Subset flat, const Vector& v);

// Uniform integer point in [-height, height]^k off every hyperplane of A_X.
Vector random_basepoint(const Arrangement& a, Subset flat, std::uint64_t seed, long height);

struct Truncation {
  FibreArrangement witness;     // a generic fibre realizing T_X
  std::vector<Subset> circuits;  // over fibre positions, lexicographic
  std::size_t agreeing = 0;      // samples that produced this matroid
  std::size_t samples = 0;
  long height = 0;               // coordinate height of the successful round
  std::uint64_t seed = 0;
};

// Complete principal truncation T_X(M(A)) as the majority matroid of random
// fibres. Throws GenericityFailure (naming the seed) if no matroid wins a
// strict majority after the height has been doubled a few times.
Truncation principal_truncation(const Arrangement& a, Subset flat, std::size_t samples = 7, std::uint64_t seed = 1);

// Compares the flats of T_X with {Y : X ^ Y = bottom} u {Y : X <= Y} and the
// expected ranks. PreconditionError unless X is modular.
bool truncation_lattice_check(const Arrangement& a, Subset flat, std::uint64_t seed = 1);

}  // namespace otalg

#endif  // OTALG_ARRMAT_FIBRE_HPP
