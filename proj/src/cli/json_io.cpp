#include "otalg/cli/json_io.hpp"

#include <fstream>

namespace otalg::cli {

namespace {

Rational entry(const json& e, std::size_t row, std::size_t col) {
  const auto where = " at row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
  if (e.is_number_integer()) return Rational(e.get<long>());
  if (!e.is_string()) throw FormatError("matrix entries must be rational strings" + where);
  try {
    return parse_rational(e.get<std::string>());
  } catch (const std::exception& ex) {
    throw FormatError(std::string(ex.what()) + where);
  }
}

}  // namespace

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("arrangement must be a JSON object");
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw FormatError("missing \"matrix\" array");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw FormatError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j["matrix"].size(); ++i) {
    const auto& r = j["matrix"][i];
    if (!r.is_array()) throw FormatError("matrix row " + std::to_string(i + 1) + " is not an array");
    Vector row;
    for (std::size_t c = 0; c < r.size(); ++c) row.push_back(entry(r[c], i, c));
    rows.push_back(std::move(row));
  }
  return Arrangement::from_rows(rows, std::move(name));
}

json arrangement_to_json(const Arrangement& a) {
  json m = json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (const auto& x : a.functional(i)) row.push_back(to_string(x));
    m.push_back(std::move(row));
  }
  json j{{"matrix", std::move(m)}};
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

Arrangement load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return arrangement_from_json(j);
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return to_string(z); }

json to_json(const UniPoly& p) { return to_json(p.coefficients()); }

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json subset_json(Subset s) {
  json out = json::array();
  for (auto i : elements_of(s)) out.push_back(i + 1);
  return out;
}

json elements_json(const std::vector<std::size_t>& zero_based) {
  json out = json::array();
  for (auto i : zero_based) out.push_back(i + 1);
  return out;
}

}  // namespace otalg::cli
