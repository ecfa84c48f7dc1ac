#ifndef OTALG_CLI_JSON_IO_HPP
#define OTALG_CLI_JSON_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "otalg/arrmat/arrangement.hpp"
#include "otalg/exactcore/unipoly.hpp"

namespace otalg::cli {

using nlohmann::json;

// Malformed JSON or a value of the wrong shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"name": str?, "matrix": [[rational-string, ...], ...]}, one row per
// hyperplane. Plain JSON integers are accepted for entries too.
Arrangement arrangement_from_json(const json& j);
json arrangement_to_json(const Arrangement& a);

// FormatError for unreadable or malformed files; InvalidArrangement when the
// matrix parses but is not a central essential arrangement.
Arrangement load(const std::filesystem::path& path);

json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const UniPoly& p);  // coefficient strings, constant term first
json to_json(const std::vector<Integer>& v);
json to_json(const std::vector<Rational>& v);
// 1-based element labels
json subset_json(Subset s);
json elements_json(const std::vector<std::size_t>& zero_based);

}  // namespace otalg::cli

#endif  // OTALG_CLI_JSON_IO_HPP
