#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "otalg/arrmat/modular.hpp"
#include "otalg/cli/catalog.hpp"
#include "otalg/cli/json_io.hpp"
#include "otalg/cli/report.hpp"
#include "otalg/errors.hpp"

using namespace otalg;
using namespace otalg::cli;

namespace {

struct Globals {
  bool as_json = false;
  std::optional<unsigned> degree;
  std::uint64_t seed = 1;
  std::string flats = "all";
};

// A path when the file exists, otherwise a catalog name.
Arrangement resolve(const std::string& source) {
  if (std::filesystem::exists(source)) return load(source);
  return catalog(source).arrangement;
}

std::optional<std::vector<std::size_t>> parse_flats(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::vector<std::size_t> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--flats expects 'all' or comma-separated flat ids, got '" + text + "'");
    }
  }
  return ids;
}

std::string brace(Subset s) { return subset_to_string(s); }

void print_report(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.body.dump(2) << "\n";
    return;
  }
  for (const auto& f : r.body["checks"]) {
    std::cout << f["check"].get<std::string>();
    if (!f["inputs"].empty()) std::cout << " " << f["inputs"].dump();
    std::cout << "  " << f["status"].get<std::string>();
    if (!f["verdict"].is_null()) std::cout << "  verdict=" << (f["verdict"].get<bool>() ? "true" : "false");
    if (f.contains("message")) std::cout << "  (" << f["message"].get<std::string>() << ")";
    std::cout << "\n";
  }
  const auto& s = r.body["summary"];
  std::cout << s["fragments"] << " results, " << s["violations"] << " violations, " << s["errors"] << " errors; degree bound "
            << r.body["degree_bound"] << ", seed " << r.body["seed"] << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Orlik-Terao algebra and arrangement invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.as_json, "JSON output");
  app.add_option("--degree", g.degree, "degree bound D")->check(CLI::Range(0u, 64u));
  app.add_option("--seed", g.seed, "seed for random choices");
  app.add_option("--flats", g.flats, "'all' or comma-separated flat ids");

  std::string path, source, name;
  std::vector<std::string> checks;

  auto* load_cmd = app.add_subcommand("load", "validate an arrangement file");
  load_cmd->add_option("path", path)->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog names or print one entry");
  catalog_cmd->add_option("name", name);
  auto* info_cmd = app.add_subcommand("info", "summary invariants");
  auto* circuits_cmd = app.add_subcommand("circuits", "circuits with their coefficients");
  auto* flats_cmd = app.add_subcommand("flats", "lattice of flats");
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial");
  for (auto* c : {info_cmd, circuits_cmd, flats_cmd, poincare_cmd})
    c->add_option("source", source, "file path or catalog name")->required();
  auto* check_cmd = app.add_subcommand("check", "run the named checks");
  check_cmd->add_option("source", source, "file path or catalog name")->required();
  check_cmd->add_option("names", checks, "check names")->required();
  auto* report_cmd = app.add_subcommand("report", "run every check");
  report_cmd->add_option("source", source, "file path or catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*load_cmd) {
    const auto a = load(path);
    if (g.as_json) std::cout << arrangement_summary(a).dump(2) << "\n";
    else std::cout << path << ": valid, n=" << a.n() << ", rank=" << a.rank() << "\n";
    return 0;
  }
  if (*catalog_cmd) {
    if (name.empty()) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return 0;
    }
    const auto e = catalog(name);
    if (g.as_json) {
      auto j = arrangement_to_json(e.arrangement);
      j["provenance"] = e.provenance;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.name << ": " << e.provenance << "\n";
      for (std::size_t i = 0; i < e.arrangement.n(); ++i) {
        std::cout << "  " << i + 1 << ":";
        for (const auto& x : e.arrangement.functional(i)) std::cout << " " << to_string(x);
        std::cout << "\n";
      }
    }
    return 0;
  }

  const auto a = resolve(source);
  if (*info_cmd) {
    const auto s = arrangement_summary(a);
    if (g.as_json) {
      std::cout << s.dump(2) << "\n";
    } else {
      std::cout << "name      " << a.name() << "\nn         " << a.n() << "\nrank      " << a.rank() << "\npoincare  "
                << a.poincare().to_string() << "\nflats     " << a.lattice().size() << "\ncircuits  " << a.circuits().size()
                << "\nexponents " << (s["exponents"].is_null() ? std::string("not supersolvable") : s["exponents"].dump())
                << "\n";
    }
    return 0;
  }
  if (*circuits_cmd) {
    json out = json::array();
    for (const auto& c : a.circuits()) {
      json coeffs = json::array();
      for (const auto& x : c.coeffs) coeffs.push_back(to_string(x));
      out.push_back({{"support", elements_json(c.support)}, {"coefficients", coeffs}});
      if (!g.as_json) {
        std::cout << brace(c.mask) << " :";
        for (const auto& x : c.coeffs) std::cout << " " << to_string(x);
        std::cout << "\n";
      }
    }
    if (g.as_json) std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (*flats_cmd) {
    const auto& lat = a.lattice();
    json out = json::array();
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const auto& f = lat.flat(id);
      const bool modular = is_modular_by_rank(lat, id);
      out.push_back({{"id", id}, {"rank", f.rank}, {"elements", subset_json(f.mask)}, {"mobius", lat.mobius(id)},
                     {"modular", modular}});
      if (!g.as_json)
        std::cout << id << "  rank " << f.rank << "  " << brace(f.mask) << "  mu " << lat.mobius(id)
                  << (modular ? "  modular" : "") << "\n";
    }
    if (g.as_json) std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (*poincare_cmd) {
    if (g.as_json) std::cout << json{{"poincare", to_json(a.poincare())}}.dump(2) << "\n";
    else std::cout << a.poincare().to_string() << "\n";
    return 0;
  }

  ReportOptions opts;
  opts.degree = g.degree;
  opts.seed = g.seed;
  opts.flats = parse_flats(g.flats);
  const auto r = run_report(a, *check_cmd ? checks : check_names(), opts);
  print_report(r, g.as_json);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "arr: " << e.what() << "\n";
    return 1;
  }
}
