#include "otalg/arrmat/hypergraph.hpp"

#include <cstdlib>
#include <numeric>

#include "otalg/errors.hpp"

namespace otalg {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

// Berge-acyclic iff the vertex/edge incidence graph is a forest.
bool has_hypergraph_cycle(std::size_t vertices, const std::vector<Subset>& edges) {
  UnionFind uf(vertices + edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (auto v : elements_of(edges[e]))
      if (!uf.unite(v, vertices + e)) return true;
  return false;
}

Hypergraph3 rank2_hypergraph(const Arrangement& a, EdgeFilter filter) {
  const auto& lat = a.lattice();
  Hypergraph3 g;
  g.vertices = a.n();
  for (std::size_t id : lat.of_rank(2)) {
    const Flat& f = lat.flat(id);
    // A rank-2 flat on k hyperplanes has |mu| = k - 1.
    if (std::labs(lat.mobius(id)) == 2) ++g.triple_count;
    if (filter == EdgeFilter::AtLeastThree && f.size() < 3) continue;
    g.edges.push_back(f.mask);
  }
  g.is_3graph = true;
  for (Subset e : g.edges) g.is_3graph = g.is_3graph && cardinality(e) == 3;
  g.is_3forest = g.is_3graph && !has_hypergraph_cycle(g.vertices, g.edges);
  if (g.is_3forest && !g.edges.empty()) {
    UnionFind uf(g.vertices);
    Subset covered = 0;
    for (Subset e : g.edges) {
      covered |= e;
      const auto vs = elements_of(e);
      for (std::size_t k = 1; k < vs.size(); ++k) uf.unite(vs[0], vs[k]);
    }
    bool connected = covered == full_set(g.vertices);
    for (std::size_t v = 1; v < g.vertices && connected; ++v) connected = uf.find(v) == uf.find(0);
    g.is_3tree = connected;
  }
  return g;
}

bool is_line_closed(const Arrangement& a) {
  const std::size_t n = a.n();
  if (n > kExhaustiveLimit)
    throw PreconditionError("line-closure sweep is exhaustive and limited to " + std::to_string(kExhaustiveLimit) +
                            " hyperplanes");
  const auto& lat = a.lattice();
  std::vector<Subset> pair(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair[i * n + j] = pair[j * n + i] = lat.closure(bit(i) | bit(j));

  for (Subset s = 0; s <= full_set(n); ++s) {
    bool closed = true;
    const auto el = elements_of(s);
    for (std::size_t x = 0; x < el.size() && closed; ++x)
      for (std::size_t y = x + 1; y < el.size() && closed; ++y) closed = is_subset(pair[el[x] * n + el[y]], s);
    if (closed && !lat.is_flat(s)) return false;
    if (s == full_set(n)) break;
  }
  return true;
}

}  // namespace otalg
