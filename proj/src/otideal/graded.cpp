#include "otalg/otideal/graded.hpp"

#include <algorithm>
#include <map>

#include "otalg/errors.hpp"
#include "otalg/exactcore/sparse_echelon.hpp"

namespace otalg {

namespace {

struct IntGenerator {
  unsigned degree = 0;
  std::vector<std::pair<PackedMonomial, Integer>> terms;
};

std::vector<IntGenerator> to_integer(std::span<const MultiPoly> gens, std::size_t nvars) {
  std::vector<IntGenerator> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto deg = g.homogeneous_degree();
    if (!deg) throw PreconditionError("generator " + g.to_string() + " is not homogeneous");
    if (g.nvars_used() > nvars) throw PreconditionError("generator " + g.to_string() + " uses too many variables");
    Integer den = 1, content = 0;
    for (const auto& [m, c] : g.terms()) den = lcm(den, Integer(c.get_den()));
    IntGenerator ig;
    ig.degree = *deg;
    for (const auto& [m, c] : g.terms()) {
      Integer v = c.get_num() * (den / c.get_den());
      content = gcd(content, v);
      ig.terms.emplace_back(pack(m), std::move(v));
    }
    for (auto& t : ig.terms) t.second /= content;
    out.push_back(std::move(ig));
  }
  return out;
}

template <typename Coeff>
Coeff coeff_from(const Integer& z) {
  if constexpr (std::is_same_v<Coeff, Integer>) {
    return z;
  } else {
    if (!z.fits_slong_p()) throw CoefficientOverflow{};
    return static_cast<std::int64_t>(z.get_si());
  }
}

// Macaulay matrix of one degree, eliminated row by row.
template <typename Coeff>
SparseEchelon<Coeff> eliminate(const std::vector<IntGenerator>& gens, const MonomialBasis& basis) {
  SparseEchelon<Coeff> ech(basis.size());
  std::map<unsigned, std::vector<PackedMonomial>> multipliers;
  typename SparseEchelon<Coeff>::Row row;
  for (const auto& g : gens) {
    if (g.degree > basis.degree()) continue;
    const unsigned k = basis.degree() - g.degree;
    auto it = multipliers.find(k);
    if (it == multipliers.end()) it = multipliers.emplace(k, MonomialBasis::enumerate(basis.nvars(), k)).first;
    for (PackedMonomial m : it->second) {
      row.clear();
      for (const auto& [t, c] : g.terms) row.push_back({basis.index_of(t + m), coeff_from<Coeff>(c)});
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
      ech.insert(row);
    }
  }
  return ech;
}

struct DegreeResult {
  std::size_t rank = 0;
  std::vector<PackedMonomial> leading;
  bool big = false;
};

DegreeResult run_degree(const std::vector<IntGenerator>& gens, std::size_t nvars, unsigned d, const TermOrder& order,
                        bool keep_leading) {
  DegreeResult r;
  if (nvars == 0) return r;
  const MonomialBasis basis(nvars, d, order);
  auto finish = [&](const auto& ech) {
    r.rank = ech.rank();
    if (keep_leading) {
      for (auto col : ech.leading_columns()) r.leading.push_back(basis.at(col));
      std::sort(r.leading.begin(), r.leading.end());
    }
  };
  try {
    finish(eliminate<std::int64_t>(gens, basis));
  } catch (const CoefficientOverflow&) {
    r.big = true;
    finish(eliminate<Integer>(gens, basis));
  }
  return r;
}

TermOrder default_order(std::size_t nvars) { return TermOrder::grevlex_descending(nvars); }

}  // namespace

Integer monomial_count(std::size_t nvars, unsigned d) {
  if (nvars == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<long>(nvars + d) - 1, d);
}

GradedIdealView graded_view(std::vector<MultiPoly> generators, std::size_t nvars, unsigned max_degree,
                            const GradedOptions& options) {
  if (nvars > kMaxPackedVars || max_degree > kMaxPackedDegree)
    throw PreconditionError("degreewise computations are limited to 16 variables and degree 15");
  GradedIdealView v;
  v.nvars = nvars;
  v.max_degree = max_degree;
  const auto gens = to_integer(generators, nvars);
  std::erase_if(generators, [](const MultiPoly& g) { return g.is_zero(); });
  v.generators = std::move(generators);
  const TermOrder order = options.order ? *options.order : default_order(nvars);
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto r = run_degree(gens, nvars, d, order, options.keep_leading);
    v.ideal_dims.push_back(r.rank);
    v.hilbert.push_back(monomial_count(nvars, d) - r.rank);
    v.big_integers = v.big_integers || r.big;
    if (options.keep_leading) v.leading.push_back(std::move(r.leading));
  }
  return v;
}

std::size_t degree_rank(std::span<const MultiPoly> generators, std::size_t nvars, unsigned d) {
  if (nvars > kMaxPackedVars || d > kMaxPackedDegree)
    throw PreconditionError("degreewise computations are limited to 16 variables and degree 15");
  return run_degree(to_integer(generators, nvars), nvars, d, default_order(nvars), false).rank;
}

bool same_degree_span(std::span<const MultiPoly> a, std::span<const MultiPoly> b, std::size_t nvars, unsigned d) {
  const std::size_t ra = degree_rank(a, nvars, d);
  if (degree_rank(b, nvars, d) != ra) return false;
  std::vector<MultiPoly> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return degree_rank(both, nvars, d) == ra;
}

}  // namespace otalg
