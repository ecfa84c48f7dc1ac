#ifndef OTALG_ARRMAT_HYPERGRAPH_HPP
#define OTALG_ARRMAT_HYPERGRAPH_HPP

#include <vector>

#include "otalg/arrmat/arrangement.hpp"

namespace otalg {

// Which rank-2 flats become edges. The literal reading takes all of them;
// the default drops the two-element ones, which every generic pair produces.
enum class EdgeFilter { AtLeastThree, AllRankTwo };

struct Hypergraph3 {
  std::size_t vertices = 0;
  std::vector<Subset> edges;
  bool is_3graph = false;   // all edges have exactly three vertices
  bool is_3forest = false;  // 3-graph with no hypergraph cycle
  bool is_3tree = false;    // connected 3-forest covering every vertex
  std::size_t triple_count = 0;  // rank-2 flats with |mu| = 2
};

Hypergraph3 rank2_hypergraph(const Arrangement& a, EdgeFilter filter = EdgeFilter::AtLeastThree);

// Whether the hypergraph contains a cycle (two edges meeting twice counts).
bool has_hypergraph_cycle(std::size_t vertices, const std::vector<Subset>& edges);

// True iff every subset closed under closures of pairs is a flat.
// Exhaustive; PreconditionError for n > 16.
bool is_line_closed(const Arrangement& a);

}  // namespace otalg

#endif  // OTALG_ARRMAT_HYPERGRAPH_HPP
