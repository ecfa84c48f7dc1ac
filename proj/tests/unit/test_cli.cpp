#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "otalg/cli/catalog.hpp"
#include "otalg/cli/json_io.hpp"
#include "otalg/cli/report.hpp"
#include "otalg/errors.hpp"

using namespace otalg;
using namespace otalg::cli;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("otalg_cli_" + name + ".json");
  std::ofstream(p) << text;
  return p;
}

InvalidArrangement::Reason reason_of(const std::string& text) {
  try {
    arrangement_from_json(json::parse(text));
  } catch (const InvalidArrangement& e) {
    return e.reason();
  }
  ADD_FAILURE() << "accepted " << text;
  return InvalidArrangement::Reason::Empty;
}

std::vector<json> fragments(const Report& r, const std::string& check) {
  std::vector<json> out;
  for (const auto& f : r.body["checks"])
    if (f["check"] == check) out.push_back(f);
  return out;
}

}  // namespace

TEST(Catalog, NamedEntries) {
  const auto a3 = catalog("A3").arrangement;
  EXPECT_EQ(a3.n(), 6u);
  EXPECT_EQ(a3.rank(), 3u);
  EXPECT_EQ(a3.matrix(), fixture::a3().matrix());
  EXPECT_EQ(catalog("X3").arrangement.matrix(), fixture::x3().matrix());
  EXPECT_EQ(catalog("X2").arrangement.matrix(), fixture::x2().matrix());
  const auto nf = catalog("nonFano").arrangement;
  EXPECT_EQ(nf.n(), 7u);
  EXPECT_EQ(nf.rank(), 3u);
  EXPECT_EQ(nf.matrix(), fixture::non_fano().matrix());
}

TEST(Catalog, Patterns) {
  EXPECT_EQ(catalog("boolean:4").arrangement.matrix(), fixture::boolean(4).matrix());
  const auto fig = catalog("3tree:fig2").arrangement;
  EXPECT_EQ(fig.n(), 15u);
  EXPECT_EQ(fig.rank(), 8u);
  const auto two = catalog("3tree:1").arrangement;
  EXPECT_EQ(two.n(), 5u);
  EXPECT_EQ(two.rank(), 3u);
  EXPECT_EQ(catalog("3tree:random:4:2").arrangement.n(), 9u);
  const auto g = catalog("generic:6:3:1").arrangement;
  EXPECT_EQ(g.n(), 6u);
  EXPECT_EQ(g.rank(), 3u);
  for (const auto& n : catalog_names()) EXPECT_NO_THROW(catalog(n)) << n;
}

TEST(Catalog, Unknown) {
  EXPECT_THROW(catalog("A4"), UnknownCatalogEntry);
  EXPECT_THROW(catalog("boolean:x"), UnknownCatalogEntry);
  EXPECT_THROW(catalog("boolean:0"), UnknownCatalogEntry);
  EXPECT_THROW(catalog("3tree:0"), UnknownCatalogEntry);
  EXPECT_THROW(catalog("3tree:9"), UnknownCatalogEntry);
  EXPECT_THROW(catalog("generic:3:3:1"), PreconditionError);
}

TEST(Load, Identity) {
  const auto p = write_temp("identity", R"({"name": "id", "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  const auto a = load(p);
  EXPECT_EQ(a.n(), 3u);
  EXPECT_EQ(a.rank(), 3u);
  EXPECT_EQ(a.name(), "id");
  EXPECT_TRUE(a.circuits().empty());
}

TEST(Load, A3WithRationals) {
  const auto p = write_temp("a3", R"({"matrix": [["1","0","0"],["0","1","0"],["0","0","1"],
      ["1/2","-1/2","0"],["1","0","-1"],["0","2","-2"]]})");
  const auto a = load(p);
  EXPECT_EQ(a.n(), 6u);
  EXPECT_EQ(a.rank(), 3u);
  EXPECT_EQ(a.poincare(), fixture::a3().poincare());
}

TEST(Load, Rejections) {
  using R = InvalidArrangement::Reason;
  EXPECT_EQ(reason_of(R"({"matrix": [["1","0"],["2","0"]]})"), R::ProportionalRows);
  EXPECT_EQ(reason_of(R"({"matrix": [["1","0"],["0","0"]]})"), R::ZeroRow);
  EXPECT_EQ(reason_of(R"({"matrix": [["1","0"],["3","0"],["0","0","1"]]})"), R::Ragged);
  EXPECT_EQ(reason_of(R"({"matrix": [["1","1","0"],["1","0","0"],["0","1","0"]]})"), R::NotEssential);
  EXPECT_EQ(reason_of(R"({"matrix": []})"), R::Empty);
  EXPECT_THROW(arrangement_from_json(json::parse(R"({"matrix": [["1/0"]]})")), FormatError);
  EXPECT_THROW(arrangement_from_json(json::parse(R"({"matrix": [["x"]]})")), FormatError);
  EXPECT_THROW(arrangement_from_json(json::parse(R"({"rows": []})")), FormatError);
  EXPECT_THROW(load(write_temp("broken", "{not json")), FormatError);
  EXPECT_THROW(load("/nonexistent/arrangement.json"), FormatError);
}

TEST(Json, RoundTrip) {
  for (const auto& name : {"A3", "X2", "generic:5:3:2"}) {
    const auto a = catalog(name).arrangement;
    const auto b = arrangement_from_json(json::parse(arrangement_to_json(a).dump()));
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_EQ(a.name(), b.name());
  }
  EXPECT_EQ(to_json(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_json(Rational(5)), "5");
  EXPECT_EQ(subset_json(bit(0) | bit(3)), json::array({1, 4}));
}

TEST(Report, A3AllChecks) {
  ReportOptions o;
  o.degree = 6;
  const auto r = run_report(catalog("A3").arrangement, check_names(), o);
  EXPECT_EQ(r.body["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r.errors, 0u);
  EXPECT_EQ(fragments(r, "qci").at(0)["verdict"], false);
  EXPECT_EQ(fragments(r, "quadratic").at(0)["verdict"], true);
  // the only failing identity is the Fitting one on the top flat
  std::vector<json> bad;
  for (const auto& f : r.body["checks"])
    if (f["status"] == "violation") bad.push_back(f);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0]["check"], "fitting");
  EXPECT_EQ(bad[0]["inputs"]["rank"], 3);
  EXPECT_EQ(bad[0]["witnesses"]["fundamental_match"], true);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Report, X3NonModularCoatom) {
  ReportOptions o;
  const auto a = catalog("X3").arrangement;
  const auto r = run_report(a, {"factorization", "bc-modular"}, o);
  EXPECT_EQ(r.exit_code(), 0);
  const Subset xy = bit(0) | bit(1) | bit(3);
  bool seen = false;
  for (const auto& f : fragments(r, "factorization")) {
    if (f["inputs"]["elements"] != subset_json(xy)) continue;
    seen = true;
    EXPECT_EQ(f["verdict"], false);
    for (const char* k : {"modular", "hilbert_factors", "pi_factors", "fibre_match"}) EXPECT_EQ(f["witnesses"][k], false) << k;
    EXPECT_EQ(f["witnesses"]["fibre_inequality"], true);
  }
  EXPECT_TRUE(seen);
  for (const auto& f : fragments(r, "bc-modular"))
    if (f["inputs"]["elements"] == subset_json(xy)) EXPECT_EQ(f["verdict"], false);
}

TEST(Report, BooleanTrivial) {
  const auto r = run_report(catalog("boolean:3").arrangement, check_names(), {});
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& f : r.body["checks"]) {
    if (f["check"] == "generic-betti") {
      EXPECT_EQ(f["status"], "skipped");
      continue;
    }
    EXPECT_EQ(f["status"], "ok") << f.dump();
    if (f["check"] != "fitting") EXPECT_EQ(f["verdict"], true) << f.dump();
  }
}

TEST(Report, OrderingAndDeterminism) {
  ReportOptions o;
  o.seed = 7;
  const auto a = catalog("X2").arrangement;
  const auto r1 = run_report(a, {"terao", "groebner", "2formal", "factorization"}, o);
  const auto r2 = run_report(a, {"factorization", "2formal", "groebner", "terao", "terao"}, o);
  EXPECT_EQ(strip_timings(r1.body), strip_timings(r2.body));
  std::string last;
  for (const auto& f : r1.body["checks"]) {
    EXPECT_LE(last, f["check"].get<std::string>());
    last = f["check"];
  }
  EXPECT_EQ(r1.body["seed"], 7);
}

TEST(Report, GenericBetti) {
  const auto r = run_report(catalog("generic:6:3:1").arrangement, {"generic-betti"}, {});
  const auto f = fragments(r, "generic-betti").at(0);
  EXPECT_EQ(f["status"], "ok");
  EXPECT_EQ(f["verdict"], true);
  EXPECT_EQ(f["witnesses"]["euler_against_ideal"], true);
}

TEST(Report, ExplicitFlatsAndUsage) {
  ReportOptions o;
  o.flats = std::vector<std::size_t>{0, 7};
  const auto r = run_report(catalog("A3").arrangement, {"fitting"}, o);
  const auto fr = fragments(r, "fitting");
  ASSERT_EQ(fr.size(), 2u);
  EXPECT_EQ(fr[0]["status"], "skipped");
  EXPECT_EQ(fr[1]["status"], "ok");
  EXPECT_THROW(run_report(catalog("A3").arrangement, {"nope"}, {}), UsageError);
  o.flats = std::vector<std::size_t>{99};
  EXPECT_THROW(run_report(catalog("A3").arrangement, {"fitting"}, o), UsageError);
}
