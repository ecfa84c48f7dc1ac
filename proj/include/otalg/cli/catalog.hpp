#ifndef OTALG_CLI_CATALOG_HPP
#define OTALG_CLI_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otalg/arrmat/arrangement.hpp"

namespace otalg::cli {

class UnknownCatalogEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string name;
  Arrangement arrangement;
  std::string provenance;
};

// Named arrangements. Columns are x, y, z, ...; rows follow the order of the
// factors in the defining polynomial.
//
//   A3, X3, X2, nonFano
//   boolean:n
//   3tree:fig2                 the seven-triangle tree, n = 15, l = 8
//   3tree:g1,g2,...            glue steps, 1-based element labels
//   3tree:random:T:seed        T triangles
//   generic:n:l:seed
CatalogEntry catalog(std::string_view name);

// The fixed names plus one example of each pattern.
std::vector<std::string> catalog_names();

}  // namespace otalg::cli

#endif  // OTALG_CLI_CATALOG_HPP
