#include "otalg/arrmat/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "otalg/errors.hpp"

namespace otalg {

Arrangement graphic_arrangement(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges,
                                std::string name) {
  Matrix m(edges.size(), vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= vertices || v >= vertices || u == v) throw PreconditionError("bad graph edge");
    m(e, u) = 1;
    m(e, v) = -1;
  }
  return Arrangement(essentialize(m), std::move(name));
}

Arrangement build_3tree(std::span<const std::array<std::size_t, 3>> triangles, std::string name) {
  if (triangles.empty()) throw InvalidSpec("a 3-tree needs at least one triangle");
  std::map<std::size_t, std::size_t> element_of_label;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t vertices = 0;

  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2])
      throw InvalidSpec("triangle " + std::to_string(t + 1) + " repeats a label");
    std::vector<std::size_t> known, fresh;
    for (auto l : tri) (element_of_label.count(l) ? known : fresh).push_back(l);
    if (t == 0) {
      edges = {{0, 1}, {1, 2}, {0, 2}};
      vertices = 3;
      for (std::size_t k = 0; k < 3; ++k) element_of_label[tri[k]] = k;
      continue;
    }
    if (known.size() >= 2)
      throw InvalidSpec("triangle " + std::to_string(t + 1) + " shares " + std::to_string(known.size()) +
                        " elements with earlier triangles, creating a hypergraph cycle");
    if (known.empty()) throw InvalidSpec("triangle " + std::to_string(t + 1) + " is not glued to earlier triangles");
    const auto [u, v] = edges[element_of_label[known[0]]];
    const std::size_t w = vertices++;
    element_of_label[fresh[0]] = edges.size();
    edges.emplace_back(u, w);
    element_of_label[fresh[1]] = edges.size();
    edges.emplace_back(v, w);
  }
  return graphic_arrangement(vertices, edges, std::move(name));
}

Arrangement build_3tree_glued(std::span<const std::size_t> glue, std::string name) {
  std::vector<std::array<std::size_t, 3>> triangles{{0, 1, 2}};
  std::size_t next = 3;
  for (std::size_t k = 0; k < glue.size(); ++k) {
    if (glue[k] >= next)
      throw InvalidSpec("step " + std::to_string(k + 1) + " glues onto element " + std::to_string(glue[k] + 1) +
                        ", which does not exist yet");
    triangles.push_back({glue[k], next, next + 1});
    next += 2;
  }
  return build_3tree(triangles, std::move(name));
}

std::vector<std::size_t> figure_tree_glue() {
  // Triangle x = {0,1,2}; y on 0 and z on 1; u, v on the two new elements
  // of y; r and s both on the same new element of z.
  return {0, 1, 3, 4, 6, 6};
}

std::vector<std::size_t> random_tree_glue(std::size_t triangles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> glue;
  for (std::size_t k = 1; k < triangles; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * k);
    glue.push_back(pick(rng));
  }
  return glue;
}

Arrangement generic_arrangement(std::size_t n, std::size_t l, std::uint64_t seed) {
  if (!(n > l && l >= 3))
    throw PreconditionError("generic arrangement needs n > l >= 3, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
  if (n > kMaxGroundSet) throw PreconditionError("too many hyperplanes");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-10, 10);
  const std::string name = "generic:" + std::to_string(n) + ":" + std::to_string(l) + ":" + std::to_string(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix m(n, l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < l; ++j) m(i, j) = coord(rng);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = !is_zero_vector(m.row(i));
    if (!ok) continue;
    const VectorConfiguration config(m);
    // Every l-subset must be a basis.
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(l), true);
    do {
      Subset s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (choose[i]) s |= bit(i);
      ok = config.rank(s) == l;
    } while (ok && std::prev_permutation(choose.begin(), choose.end()));
    if (ok) return Arrangement(std::move(m), name);
  }
  throw GenericityFailure("no generic matrix found for " + name);
}

}  // namespace otalg
