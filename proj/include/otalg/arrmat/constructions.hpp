#ifndef OTALG_ARRMAT_CONSTRUCTIONS_HPP
#define OTALG_ARRMAT_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"

namespace otalg {

// Graphic arrangement of a graph built from triangles. Each triangle lists
// three element labels; every triangle after the first must share exactly
// one label with the triangles before it, and the two fresh labels become
// the new edges through a new vertex. Elements are numbered by first
// appearance. Sharing two or more labels would close a hypergraph cycle,
// sharing none would disconnect the gluing; both throw InvalidSpec.
Arrangement build_3tree(std::span<const std::array<std::size_t, 3>> triangles, std::string name = {});

// Glue form: start from one triangle (elements 0,1,2); step k attaches a new
// triangle along existing element glue[k], adding the next two elements.
Arrangement build_3tree_glued(std::span<const std::size_t> glue, std::string name = {});

// Glue steps reproducing the seven-triangle tree with n = 15, l = 8.
std::vector<std::size_t> figure_tree_glue();

// A random connected glue sequence with the given number of triangles.
std::vector<std::size_t> random_tree_glue(std::size_t triangles, std::uint64_t seed);

// Uniform matroid U_{l,n} realized by a random integer matrix, verified on
// every l-subset. PreconditionError unless n > l >= 3; GenericityFailure
// (naming the seed) if every retry fails.
Arrangement generic_arrangement(std::size_t n, std::size_t l, std::uint64_t seed);

// Rows e_u - e_v of a graph on `vertices` vertices, essentialized.
Arrangement graphic_arrangement(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges,
                                std::string name = {});

}  // namespace otalg

#endif  // OTALG_ARRMAT_CONSTRUCTIONS_HPP
