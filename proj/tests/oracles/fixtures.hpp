#ifndef OTALG_TESTS_FIXTURES_HPP
#define OTALG_TESTS_FIXTURES_HPP

// Small arrangements written out from their defining products, coordinates
// (x, y, z). Kept apart from the CLI catalog so the tests do not depend on it.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/arrmat/constructions.hpp"

namespace fixture {

using otalg::Arrangement;
using otalg::Matrix;

inline Arrangement from_ints(const std::vector<std::vector<long>>& rows, std::string name = {}) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return Arrangement(std::move(m), std::move(name));
}

inline std::vector<std::vector<long>> ints_of(const Matrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num().get_si();
  return out;
}

inline Arrangement boolean(std::size_t n) {
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return from_ints(rows, "boolean");
}

// xy(x+y)
inline Arrangement three_lines() { return from_ints({{1, 0}, {0, 1}, {1, 1}}, "three lines"); }

// n lines through the origin in the plane.
inline Arrangement pencil(std::size_t n) {
  std::vector<std::vector<long>> rows{{1, 0}, {0, 1}};
  for (std::size_t k = 1; rows.size() < n; ++k) rows.push_back({1, static_cast<long>(k)});
  return from_ints(rows, "pencil");
}

// xyz(x-y)(x-z)(y-z)
inline Arrangement a3() { return from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}, "A3"); }

// xyz(x+y)(x+z)(y+z)
inline Arrangement x3() { return from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, "X3"); }

// xyz(x+y)(x-z)(y-z)(x+y-2z)
inline Arrangement x2() {
  return from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -2}}, "X2");
}

// xyz(x-y)(x-z)(y-z)(x+y-z)
inline Arrangement non_fano() {
  return from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -1}}, "nonFano");
}

// Random small integer matrix with distinct nonzero rows and full rank; may
// still fail validation, in which case the caller retries.
inline std::optional<Arrangement> random_arrangement(std::mt19937_64& rng, std::size_t n, std::size_t l, long h = 2) {
  std::uniform_int_distribution<long> coord(-h, h);
  std::vector<std::vector<long>> rows(n, std::vector<long>(l));
  for (auto& r : rows)
    for (auto& x : r) x = coord(rng);
  try {
    return from_ints(rows, "random");
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Random simple graph on `vertices` vertices with at least one edge.
inline Arrangement random_graphic(std::mt19937_64& rng, std::size_t vertices, double p = 0.6) {
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (edges.empty()) {
    for (std::size_t u = 0; u < vertices; ++u)
      for (std::size_t v = u + 1; v < vertices; ++v)
        if (keep(rng)) edges.emplace_back(u, v);
  }
  return otalg::graphic_arrangement(vertices, edges, "graphic");
}

}  // namespace fixture

#endif  // OTALG_TESTS_FIXTURES_HPP
