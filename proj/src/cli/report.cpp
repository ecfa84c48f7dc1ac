#include "otalg/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"
#include "otalg/exactcore/ratfun.hpp"
#include "otalg/nbc/broken_circuit.hpp"
#include "otalg/otideal/betti.hpp"
#include "otalg/otideal/decomposition.hpp"
#include "otalg/otideal/fitting.hpp"
#include "otalg/otideal/groebner.hpp"
#include "otalg/otideal/hilbert.hpp"
#include "otalg/otideal/quadratic.hpp"

namespace otalg::cli {

namespace {

struct Context {
  const Arrangement& a;
  unsigned degree;
  std::uint64_t seed;
  std::vector<std::size_t> flats;  // lattice ids
  bool explicit_flats = false;     // inapplicable flats are reported only when asked for by id
};

bool applicable(const Context& c, std::size_t id, bool need_dependent) {
  if (c.explicit_flats) return true;
  const auto& x = c.a.lattice().flat(id);
  return x.rank > 0 && (!need_dependent || x.size() > x.rank);
}

json fragment(const std::string& check, json inputs, unsigned degree) {
  return json{{"check", check}, {"inputs", std::move(inputs)}, {"status", "ok"}, {"verdict", nullptr},
              {"degree_bound", degree}, {"witnesses", json::object()}};
}

// Runs body on the fragment and maps exceptions to a status.
json guarded(json f, const std::function<void(json&)>& body) {
  try {
    body(f);
  } catch (const InvariantViolation& e) {
    f["status"] = "violation";
    f["message"] = e.what();
  } catch (const ConventionMismatch& e) {
    f["status"] = "violation";
    f["message"] = e.what();
  } catch (const PreconditionError& e) {
    f["status"] = "skipped";
    f["message"] = e.what();
  } catch (const std::exception& e) {
    f["status"] = "error";
    f["message"] = e.what();
  }
  return f;
}

void theorem(json& f, bool holds, const std::string& what) {
  f["verdict"] = holds;
  if (!holds) {
    f["status"] = "violation";
    f["message"] = what;
  }
}

json flat_input(const Context& c, std::size_t id) {
  const auto& x = c.a.lattice().flat(id);
  return json{{"flat", id}, {"elements", subset_json(x.mask)}, {"rank", x.rank}};
}

using Fragments = std::vector<json>;

Fragments terao(const Context& c) {
  return {guarded(fragment("terao", json::object(), c.degree), [&](json& f) {
    const auto r = terao_check(c.a, c.degree);
    f["witnesses"] = {{"hilbert", to_json(r.algebraic)}, {"expected", to_json(r.expected)}};
    theorem(f, r.holds, "Hilbert function differs from pi(A, t/(1-t))");
  })};
}

Fragments relative(const Context& c) {
  Fragments out;
  for (std::size_t h = 0; h < c.a.n(); ++h)
    out.push_back(guarded(fragment("relative", {{"hyperplane", h + 1}}, c.degree), [&](json& f) {
      const auto r = relative_hilbert_check(c.a, h, c.degree);
      f["witnesses"] = {{"hilbert", to_json(r.relative)},
                        {"expected", to_json(r.expected)},
                        {"matches_projective", r.matches_projective},
                        {"exact_sequence", r.exact_sequence}};
      theorem(f, r.holds, "relative Hilbert function identity failed");
    }));
  for (std::size_t k = 1; k <= c.a.n(); ++k)
    out.push_back(guarded(fragment("relative", {{"initial_from", k}}, c.degree), [&](json& f) {
      const auto r = relative_initial_check(c.a, k, c.degree);
      f["witnesses"] = {{"hilbert", to_json(r.algebraic)}, {"stanley_reisner", to_json(r.combinatorial)}};
      theorem(f, r.holds, "quotient by y_1..y_{k-1} differs from the restricted broken circuit complex");
    }));
  return out;
}

Fragments groebner(const Context& c) {
  Fragments out;
  auto run = [&](const std::string& label, const TermOrder& order) {
    out.push_back(guarded(fragment("groebner", {{"order", label}}, c.degree), [&](json& f) {
      const auto r = groebner_degree_check(c.a, order, c.degree);
      f["witnesses"] = {{"ground_order", elements_json(r.ground_order)},
                        {"ideal_dims", r.ideal_dims},
                        {"leading_dims", r.monomial_dims},
                        {"dims_match", r.dims_match},
                        {"initial_match", r.initial_match},
                        {"sr_match", r.sr_match}};
      theorem(f, r.holds, "circuit relations are not a Groebner basis through the degree bound");
    }));
  };
  run("lex y_n > ... > y_1", TermOrder::lex_descending(c.a.n()));
  for (std::uint64_t k = 0; k < 5; ++k)
    run("random lex, seed " + std::to_string(c.seed + k), random_lex_order(c.a.n(), c.seed + k));
  return out;
}

Fragments bc_modular(const Context& c) {
  Fragments out;
  for (auto id : c.flats)
    if (applicable(c, id, false)) out.push_back(guarded(fragment("bc-modular", flat_input(c, id), c.degree), [&](json& f) {
      const auto r = bc_modular_check(c.a, c.a.lattice().flat(id).mask, c.seed);
      f["verdict"] = r.modular;
      f["witnesses"] = {{"subcomplex", r.subcomplex}, {"equal", r.equal}, {"modular", r.modular}};
    }));
  return out;
}

Fragments factorization(const Context& c) {
  Fragments out;
  const unsigned d = std::max<unsigned>(c.degree, static_cast<unsigned>(c.a.rank()));
  for (auto id : c.flats)
    if (applicable(c, id, false)) out.push_back(guarded(fragment("factorization", flat_input(c, id), d), [&](json& f) {
      const auto r = modular_factorization_check(c.a, c.a.lattice().flat(id).mask, d, c.seed);
      f["verdict"] = r.modular;
      f["witnesses"] = {{"modular", r.modular},
                        {"hilbert_factors", r.hilbert_factors},
                        {"pi_factors", r.pi_factors},
                        {"fibre_match", r.fibre_match},
                        {"fibre_inequality", r.fibre_inequality},
                        {"truncation_poincare", to_json(r.truncation_poincare)},
                        {"relative_hilbert", to_json(r.relative)},
                        {"fibre_hilbert", to_json(r.fibre)}};
    }));
  return out;
}

Fragments fitting(const Context& c) {
  Fragments out;
  for (auto id : c.flats)
    if (applicable(c, id, true)) out.push_back(guarded(fragment("fitting", flat_input(c, id), static_cast<unsigned>(c.a.lattice().flat(id).rank)),
                          [&](json& f) {
                            const auto r = fitting_check(c.a, c.a.lattice().flat(id).mask);
                            f["witnesses"] = {{"minors", r.minors},
                                              {"minors_rank", r.minors_rank},
                                              {"relations", r.relations},
                                              {"relations_rank", r.relations_rank},
                                              {"fundamental_rank", r.fundamental_rank},
                                              {"fundamental_match", r.fundamental_match}};
                            theorem(f, r.holds, "minors and spanning circuit relations differ");
                          }));
  return out;
}

Fragments coatom(const Context& c) {
  Fragments out;
  const auto& lat = c.a.lattice();
  for (auto id : c.flats) {
    if (lat.flat(id).rank + 1 != c.a.rank()) continue;
    out.push_back(guarded(fragment("coatom", flat_input(c, id), c.degree), [&](json& f) {
      const auto r = coatom_presentation_check(c.a, lat.flat(id).mask, c.degree);
      json quadrics = json::array();
      for (const auto& q : r.quadrics)
        quadrics.push_back({{"i", q.i + 1}, {"j", q.j + 1}, {"join", q.join + 1}, {"a", to_json(q.a)},
                            {"b", to_json(q.b)}, {"quadric", q.quadric.to_string()}});
      f["witnesses"] = {{"quadrics", std::move(quadrics)}, {"failing_degrees", r.failing_degrees}};
      theorem(f, r.holds, "quadrics plus I(A_X) do not span I(A)");
    }));
  }
  return out;
}

Fragments quadratic(const Context& c) {
  return {guarded(fragment("quadratic", json::object(), static_cast<unsigned>(c.a.rank())), [&](json& f) {
    const auto r = is_quadratic(c.a);
    f["verdict"] = r.quadratic;
    f["witnesses"] = {{"method", to_string(r.method)},
                      {"quadrics", r.quadrics},
                      {"ideal_dims", r.ideal_dims},
                      {"quadric_dims", r.quadric_dims},
                      {"failing_degree", r.failing_degree ? json(*r.failing_degree) : json(nullptr)},
                      {"certificate_order", elements_json(r.certificate_order)}};
  })};
}

Fragments two_formal(const Context& c) {
  return {guarded(fragment("2formal", json::object(), 2), [&](json& f) {
    const auto r = is_2formal(c.a);
    const bool quad = is_quadratic(c.a).quadratic;
    f["verdict"] = r.formal;
    f["witnesses"] = {{"relation_dim", r.relation_dim}, {"triple_rank", r.triple_rank}, {"quadratic", quad}};
    if (quad && !r.formal) {
      f["status"] = "violation";
      f["message"] = "quadratic but not 2-formal";
    }
  })};
}

Fragments qci(const Context& c) {
  return {guarded(fragment("qci", json::object(), static_cast<unsigned>(c.a.rank())), [&](json& f) {
    const auto r = qci_check(c.a);
    f["verdict"] = r.qci;
    f["witnesses"] = {{"quadratic_ci", r.quadratic_ci},
                      {"mu_bound_and_count", r.mu_bound_and_count},
                      {"pi_form", r.pi_form},
                      {"ss_exponents12", r.ss_exponents12},
                      {"lineclosed_3forest", r.lineclosed_3forest},
                      {"quadratic", r.quadratic},
                      {"mu_bound_and_count_raw", r.mu_bound_and_count_raw},
                      {"pi_form_raw", r.pi_form_raw}};
  })};
}

Fragments koszul(const Context& c) {
  return {guarded(fragment("koszul-necessary", json::object(), c.degree), [&](json& f) {
    const auto r = koszul_necessary(c.a, c.degree);
    f["verdict"] = r.passes;
    f["witnesses"] = {{"inverse_series", to_json(r.inverse)}};
  })};
}

Fragments betti(const Context& c) {
  constexpr unsigned s_degree = 6, t_degree = 8;
  return {guarded(fragment("generic-betti", json::object(), t_degree), [&](json& f) {
    const std::size_t n = c.a.n(), l = c.a.rank();
    if (!(n > l && l >= 3) || c.a.poincare() != uniform_poincare(n, l))
      throw PreconditionError("not a generic arrangement with n > l >= 3");
    const auto b = generic_betti(n, l, s_degree, t_degree);
    // P(-1, t) against the Hilbert series of this arrangement; s-degree never
    // exceeds t-degree, so t_degree rows see every term.
    const auto full = generic_betti(n, l, t_degree, t_degree);
    std::vector<Rational> euler(t_degree + 1, Rational(0));
    for (std::size_t i = 0; i < full.p.size(); ++i)
      for (std::size_t j = 0; j <= t_degree; ++j) euler[j] += i % 2 ? Rational(-full.p[i][j]) : Rational(full.p[i][j]);
    std::vector<Rational> h;
    for (const auto& x : ot_hilbert(c.a, t_degree)) h.emplace_back(x);
    const auto prod = cauchy_product(euler, h);
    const bool against_ideal =
        prod[0] == 1 && std::all_of(prod.begin() + 1, prod.end(), [](const Rational& x) { return x == 0; });
    json table = json::array();
    for (const auto& row : b.p) table.push_back(to_json(row));
    f["witnesses"] = {{"q", to_json(b.q)},
                      {"q_generating", to_json(b.q_generating)},
                      {"p", std::move(table)},
                      {"q_matches", b.q_matches},
                      {"p_matches_geometric", b.p_matches_geometric},
                      {"euler_matches", b.euler_matches},
                      {"euler_against_ideal", against_ideal}};
    theorem(f, b.q_matches && b.p_matches_geometric && b.euler_matches && against_ideal,
            "Betti series inconsistent");
  })};
}

const std::map<std::string, std::function<Fragments(const Context&)>>& registry() {
  static const std::map<std::string, std::function<Fragments(const Context&)>> r{
      {"2formal", two_formal},       {"bc-modular", bc_modular}, {"coatom", coatom},
      {"factorization", factorization}, {"fitting", fitting},    {"generic-betti", betti},
      {"groebner", groebner},        {"koszul-necessary", koszul}, {"qci", qci},
      {"quadratic", quadratic},      {"relative", relative},     {"terao", terao},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

json arrangement_summary(const Arrangement& a) {
  json s{{"name", a.name()},
         {"n", a.n()},
         {"rank", a.rank()},
         {"matrix", arrangement_to_json(a)["matrix"]},
         {"poincare", to_json(a.poincare())},
         {"flats", a.lattice().size()},
         {"circuits", a.circuits().size()}};
  const auto chain = supersolvable_chain(a);
  s["exponents"] = chain ? json(chain->exponents) : json(nullptr);
  return s;
}

Report run_report(const Arrangement& a, const std::vector<std::string>& checks, const ReportOptions& options) {
  std::vector<std::string> selected = checks;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (const auto& name : selected)
    if (!registry().count(name)) throw UsageError("unknown check '" + name + "'");

  Context ctx{a, options.degree ? *options.degree : default_degree(a), options.seed, {}};
  const auto& lat = a.lattice();
  if (options.flats) {
    for (auto id : *options.flats)
      if (id >= lat.size()) throw UsageError("flat index " + std::to_string(id) + " out of range");
    ctx.flats = *options.flats;
    ctx.explicit_flats = true;
  } else {
    for (std::size_t id = 0; id < lat.size(); ++id) ctx.flats.push_back(id);
  }
  a.circuits();

  std::vector<std::future<std::pair<Fragments, double>>> jobs;
  for (const auto& name : selected)
    jobs.push_back(std::async(std::launch::async, [&ctx, fn = registry().at(name)] {
      const auto t0 = std::chrono::steady_clock::now();
      auto frags = fn(ctx);
      return std::make_pair(std::move(frags), std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }));

  Report rep;
  json list = json::array();
  json timings = json::object();
  for (std::size_t k = 0; k < selected.size(); ++k) {
    auto [frags, ms] = jobs[k].get();
    timings[selected[k]] = ms;
    for (auto& f : frags) {
      if (f["status"] == "violation") ++rep.violations;
      if (f["status"] == "error") ++rep.errors;
      list.push_back(std::move(f));
    }
  }
  rep.body = json{{"schema_version", kReportSchemaVersion},
                  {"arrangement", arrangement_summary(a)},
                  {"degree_bound", ctx.degree},
                  {"seed", ctx.seed},
                  {"checks", std::move(list)},
                  {"summary", {{"violations", rep.violations}, {"errors", rep.errors}}},
                  {"timings_ms", std::move(timings)}};
  rep.body["summary"]["fragments"] = rep.body["checks"].size();
  return rep;
}

json strip_timings(json report) {
  report.erase("timings_ms");
  return report;
}

}  // namespace otalg::cli
