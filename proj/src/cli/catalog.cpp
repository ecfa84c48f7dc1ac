#include "otalg/cli/catalog.hpp"

#include <charconv>

#include "otalg/arrmat/constructions.hpp"
#include "otalg/errors.hpp"

namespace otalg::cli {

namespace {

Arrangement from_ints(const std::vector<std::vector<long>>& rows, std::string name) {
  std::vector<Vector> v;
  for (const auto& r : rows) {
    Vector row;
    for (long x : r) row.emplace_back(x);
    v.push_back(std::move(row));
  }
  return Arrangement::from_rows(v, std::move(name));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t number(const std::string& s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UnknownCatalogEntry("bad number '" + s + "' in catalog name " + std::string(whole));
  return v;
}

}  // namespace

CatalogEntry catalog(std::string_view name) {
  const std::string n(name);
  if (name == "A3")
    return {n, from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}, n),
            "braid arrangement, Q = xyz(x-y)(x-z)(y-z)"};
  if (name == "X3")
    return {n, from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, n),
            "Q = xyz(x+y)(x+z)(y+z); x=y=0 is not modular"};
  if (name == "X2")
    return {n, from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -2}}, n),
            "Q = xyz(x+y)(x-z)(y-z)(x+y-2z); quadratic, not Koszul"};
  if (name == "nonFano")
    return {n, from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -1}}, n),
            "non-Fano, Q = xyz(x-y)(x-z)(y-z)(x+y-z); 2-formal, not quadratic"};

  const auto parts = split(name, ':');
  if (parts[0] == "boolean" && parts.size() == 2) {
    const auto k = number(parts[1], name);
    if (k == 0 || k > 31) throw UnknownCatalogEntry("boolean:n needs 1 <= n <= 31");
    std::vector<std::vector<long>> rows(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
    return {n, from_ints(rows, n), "coordinate hyperplanes"};
  }
  if (parts[0] == "3tree" && parts.size() >= 2) {
    if (parts.size() == 2 && parts[1] == "fig2")
      return {n, build_3tree_glued(figure_tree_glue(), n), "seven-triangle 3-tree, pi = (1+t)(1+2t)^7"};
    if (parts.size() == 4 && parts[1] == "random") {
      const auto t = number(parts[2], name);
      if (t == 0) throw UnknownCatalogEntry("3tree:random needs at least one triangle");
      return {n, build_3tree_glued(random_tree_glue(t, number(parts[3], name)), n), "random 3-tree"};
    }
    if (parts.size() == 2) {
      std::vector<std::size_t> glue;
      if (!parts[1].empty())
        for (const auto& g : split(parts[1], ',')) {
          const auto v = number(g, name);
          if (v == 0) throw UnknownCatalogEntry("3tree glue labels are 1-based");
          glue.push_back(v - 1);
        }
      try {
        return {n, build_3tree_glued(glue, n), "3-tree from glue steps"};
      } catch (const InvalidSpec& e) {
        throw UnknownCatalogEntry(std::string("invalid 3-tree ") + e.what());
      }
    }
  }
  if (parts[0] == "generic" && parts.size() == 4)
    return {n, generic_arrangement(number(parts[1], name), number(parts[2], name), number(parts[3], name)),
            "generic arrangement (uniform matroid)"};
  throw UnknownCatalogEntry("unknown catalog name '" + n + "'");
}

std::vector<std::string> catalog_names() {
  return {"A3", "X3", "X2", "nonFano", "boolean:4", "3tree:fig2", "3tree:1", "3tree:random:5:1", "generic:5:3:1"};
}

}  // namespace otalg::cli
