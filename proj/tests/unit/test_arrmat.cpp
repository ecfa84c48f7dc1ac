#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "otalg/arrmat/constructions.hpp"
#include "otalg/arrmat/fibre.hpp"
#include "otalg/arrmat/hypergraph.hpp"
#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"

using namespace otalg;

namespace {

oracle::Mat rows_of(const Arrangement& a) {
  oracle::Mat m(a.n(), std::vector<oracle::Q>(a.rank()));
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m[i][j] = a.matrix()(i, j);
  return m;
}

Subset mask(std::initializer_list<std::size_t> one_based) {
  Subset s = 0;
  for (auto i : one_based) s |= bit(i - 1);
  return s;
}

UniPoly power(long a, unsigned k) { return UniPoly{1, a}.pow(k); }

std::vector<Arrangement> random_batch(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Arrangement> out;
  while (out.size() < count) {
    std::uniform_int_distribution<std::size_t> nl(2, 4);
    const std::size_t l = nl(rng);
    std::uniform_int_distribution<std::size_t> nn(l, 7);
    if (auto a = fixture::random_arrangement(rng, nn(rng), l)) out.push_back(*a);
  }
  return out;
}

}  // namespace

TEST(Arrangement, ValidationNamesTheFailure) {
  using R = InvalidArrangement::Reason;
  auto reason = [](auto&& f) {
    try {
      f();
    } catch (const InvalidArrangement& e) {
      return e.reason();
    }
    ADD_FAILURE() << "no error";
    return R::Empty;
  };
  EXPECT_EQ(reason([] { fixture::from_ints({{1, 0}, {2, 0}}); }), R::ProportionalRows);
  EXPECT_EQ(reason([] { fixture::from_ints({{1, 0}, {0, 0}}); }), R::ZeroRow);
  EXPECT_EQ(reason([] { fixture::from_ints({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}); }), R::NotEssential);
  EXPECT_EQ(reason([] { Arrangement::from_rows({}); }), R::Empty);
  EXPECT_EQ(reason([] { Arrangement::from_rows({{1, 0}, {1}}); }), R::Ragged);
  EXPECT_EQ(reason([] { fixture::from_ints({{1, 0}, {-3, 0}}); }), R::ProportionalRows);
}

TEST(Circuits, SmallExamples) {
  EXPECT_TRUE(fixture::boolean(4).circuits().empty());

  const auto c3 = fixture::three_lines().circuits();
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].support, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(c3[0].coeffs, (Vector{1, 1, -1}));

  const auto ca = fixture::a3().circuits();
  std::size_t three = 0, four = 0;
  for (const auto& c : ca) (c.size() == 3 ? three : four)++;
  EXPECT_EQ(three, 4u);
  EXPECT_EQ(four, 3u);
}

TEST(Circuits, AgreeWithSubsetOracleAndSatisfyRelation) {
  for (const auto& a : random_batch(11, 25)) {
    const auto circuits = a.circuits();
    std::set<Subset> got, want;
    for (const auto& c : circuits) {
      got.insert(c.mask);
      EXPECT_EQ(c.coeffs.front(), 1);
      Vector sum(a.rank());
      for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t j = 0; j < a.rank(); ++j) sum[j] += c.coeffs[k] * a.matrix()(c.support[k], j);
      EXPECT_TRUE(is_zero_vector(sum));
    }
    for (auto s : oracle::brute_circuits(rows_of(a))) want.insert(s);
    EXPECT_EQ(got, want);
    for (std::size_t i = 1; i < circuits.size(); ++i) EXPECT_LT(circuits[i - 1].support, circuits[i].support);
  }
}

TEST(Lattice, SmallExamples) {
  const auto& b2 = fixture::boolean(2).lattice();
  EXPECT_EQ(b2.size(), 4u);
  EXPECT_EQ(b2.mobius(b2.top()), 1);

  const auto& la = fixture::a3().lattice();
  std::size_t big = 0, small = 0;
  for (auto id : la.of_rank(2)) (la.flat(id).size() == 3 ? big : small)++;
  EXPECT_EQ(big, 4u);
  EXPECT_EQ(small, 3u);

  // {x = y = 0} in X3 is cut out by x, y and x+y.
  const auto& lx = fixture::x3().lattice();
  const Subset xy = lx.closure(mask({1, 2}));
  EXPECT_EQ(xy, mask({1, 2, 4}));
  EXPECT_EQ(lx.flat(lx.id_of(xy)).subspace_basis.size(), 1u);
}

TEST(Lattice, AgreesWithBruteForceAndMobiusRecursion) {
  for (const auto& a : random_batch(12, 25)) {
    const auto& lat = a.lattice();
    const auto brute = oracle::brute_flats(rows_of(a));
    ASSERT_EQ(lat.size(), brute.size());
    for (const auto& f : lat.flats()) {
      ASSERT_TRUE(brute.count(f.mask));
      EXPECT_EQ(brute.at(f.mask), f.rank);
      EXPECT_EQ(f.subspace_basis.size(), a.rank() - f.rank);
      for (const auto& v : f.subspace_basis)
        for (auto i : f.indices()) EXPECT_EQ(dot(a.functional(i), v), 0);
    }
    for (std::size_t x = 0; x < lat.size(); ++x) {
      long sum = 0;
      for (std::size_t y = 0; y < lat.size(); ++y)
        if (lat.leq(y, x)) sum += lat.mobius(y);
      EXPECT_EQ(sum, x == lat.bottom() ? 1 : 0);
    }
    const auto pi = oracle::brute_poincare(rows_of(a));
    EXPECT_EQ(a.poincare(), UniPoly(std::vector<Rational>(pi.begin(), pi.end())));
    EXPECT_NO_THROW(projective_poincare(a.poincare()));
  }
}

TEST(Lattice, JoinAndMeet) {
  const auto& lat = fixture::a3().lattice();
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = 0; b < lat.size(); ++b) {
      const auto j = lat.join(a, b), m = lat.meet(a, b);
      EXPECT_TRUE(lat.leq(a, j) && lat.leq(b, j));
      EXPECT_TRUE(lat.leq(m, a) && lat.leq(m, b));
      EXPECT_LE(lat.flat(j).rank + lat.flat(m).rank, lat.flat(a).rank + lat.flat(b).rank);
    }
  }
}

TEST(Poincare, Examples) {
  for (std::size_t l = 1; l <= 5; ++l) EXPECT_EQ(fixture::boolean(l).poincare(), power(1, l));
  EXPECT_EQ(fixture::a3().poincare(), UniPoly({1, 1}) * UniPoly({1, 2}) * UniPoly({1, 3}));
  EXPECT_EQ(projective_poincare(fixture::a3().poincare()), UniPoly({1, 2}) * UniPoly({1, 3}));
  const auto fig = build_3tree_glued(figure_tree_glue());
  EXPECT_EQ(fig.n(), 15u);
  EXPECT_EQ(fig.rank(), 8u);
  EXPECT_EQ(fig.poincare(), UniPoly({1, 1}) * power(2, 7));
  EXPECT_THROW(projective_poincare(UniPoly{1, 2}), InvariantViolation);
}

TEST(Restriction, Examples) {
  const auto a = fixture::a3();
  const auto r1 = restriction(a, mask({1}));
  EXPECT_EQ(r1.arrangement.n(), 1u);
  EXPECT_EQ(r1.arrangement.rank(), 1u);

  for (const auto& arr : {fixture::a3(), fixture::x3()}) {
    const auto r = restriction(arr, arr.lattice().closure(mask({1, 2})));
    EXPECT_EQ(r.arrangement.n(), 3u);
    EXPECT_EQ(r.arrangement.rank(), 2u);
    EXPECT_EQ(r.arrangement.poincare(), UniPoly({1, 1}) * UniPoly({1, 2}));
  }
  EXPECT_THROW(restriction(a, 0), InvalidArrangement);
  EXPECT_THROW(restriction(a, mask({1, 2})), PreconditionError);
}

TEST(Modularity, Examples) {
  const auto a = fixture::a3();
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_TRUE(is_modular(a, mask({i})).modular);
  EXPECT_TRUE(is_modular(a, mask({1, 2, 4})).modular);
  const auto v = is_modular(fixture::x3(), mask({1, 2, 4}));
  EXPECT_FALSE(v.modular);
  EXPECT_FALSE(v.subspace_sum || v.rank_identity || v.short_circuit);
}

TEST(Modularity, CriteriaAgreeOnEveryFlat) {
  auto batch = random_batch(13, 20);
  for (auto f : {fixture::a3, fixture::x3, fixture::x2, fixture::non_fano}) batch.push_back(f());
  for (const auto& a : batch)
    for (const auto& f : a.lattice().flats()) EXPECT_NO_THROW(is_modular(a, f.mask)) << a.name();
}

TEST(Supersolvable, Examples) {
  const auto b = supersolvable_chain(fixture::boolean(4));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->exponents, (std::vector<std::size_t>{1, 1, 1, 1}));
  const auto a = supersolvable_chain(fixture::a3());
  ASSERT_TRUE(a);
  EXPECT_EQ(a->exponents, (std::vector<std::size_t>{1, 2, 3}));
  for (Subset x : a->chain) EXPECT_TRUE(is_modular(fixture::a3(), x).modular);
  EXPECT_FALSE(supersolvable_chain(fixture::x2()));
  EXPECT_FALSE(supersolvable_chain(fixture::x3()));
}

// Exhaustive check over all maximal chains, with modularity decided by the
// short-circuit route only.
TEST(Supersolvable, MatchesExhaustiveChainSearch) {
  auto batch = random_batch(14, 15);
  for (auto f : {fixture::a3, fixture::x3, fixture::x2, fixture::non_fano}) batch.push_back(f());
  for (const auto& a : batch) {
    const auto& lat = a.lattice();
    std::vector<bool> mod(lat.size());
    for (std::size_t id = 0; id < lat.size(); ++id) mod[id] = is_modular(a, lat.flat(id).mask).short_circuit;
    bool exists = false;
    auto walk = [&](auto&& self, std::size_t below, std::size_t r) -> void {
      if (r == lat.rank()) {
        exists = true;
        return;
      }
      for (auto id : lat.of_rank(r + 1))
        if (lat.leq(below, id) && mod[id]) self(self, id, r + 1);
    };
    walk(walk, lat.bottom(), 0);
    const auto chain = supersolvable_chain(a);
    EXPECT_EQ(chain.has_value(), exists);
    if (chain) {
      UniPoly product = UniPoly::constant(1);
      for (auto e : chain->exponents) product = product * UniPoly{1, static_cast<long>(e)};
      EXPECT_EQ(product, a.poincare());
    }
  }
}

TEST(Fibre, Examples) {
  // A3 over {x=y=0} at [1:2]: four distinct points on a line.
  const auto f = fibre_arrangement(fixture::a3(), mask({1, 2, 4}), Vector{1, 2});
  EXPECT_FALSE(f.degenerate());
  EXPECT_EQ(f.distinct_hyperplanes(), 4u);
  EXPECT_EQ(f.configuration().rank(), 2u);
  EXPECT_EQ(f.configuration().circuits().size(), 4u);
  EXPECT_EQ(f.label(0), "0");
  EXPECT_EQ(f.label(1), "3");

  // X3 over the same flat at [1:1]: x+z and y+z collapse.
  const auto g = fibre_arrangement(fixture::x3(), mask({1, 2, 4}), Vector{1, 1});
  EXPECT_TRUE(g.degenerate());
  EXPECT_EQ(g.distinct_hyperplanes(), 3u);

  const auto h = fibre_arrangement(fixture::boolean(2), mask({1, 2}), Vector{1, 1});
  EXPECT_EQ(h.ground.size(), 1u);
  EXPECT_EQ(h.configuration().rank(), 1u);

  EXPECT_THROW(fibre_arrangement(fixture::a3(), mask({1, 2, 4}), Vector{1, 1}), InvalidBasepoint);
  EXPECT_THROW(fibre_arrangement(fixture::a3(), mask({1, 2, 4}), Vector{0, 1}), InvalidBasepoint);
  EXPECT_THROW(fibre_arrangement(fixture::a3(), mask({1, 2, 4}), Vector{1}), InvalidBasepoint);
  EXPECT_THROW(fibre_arrangement(fixture::a3(), 0, Vector{}), PreconditionError);
}

TEST(Truncation, Examples) {
  // U_{2,4}: the circuits are the four 3-subsets of the four positions.
  const std::vector<Subset> u24{0b0111, 0b1011, 0b1101, 0b1110};
  for (const auto& a : {fixture::a3(), fixture::x3()}) {
    auto t = principal_truncation(a, mask({1, 2, 4}));
    std::vector<Subset> sorted = t.circuits;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, u24) << a.name();
    EXPECT_GT(2 * t.agreeing, t.samples);
  }
  const auto t = principal_truncation(fixture::a3(), mask({1, 2, 4}));
  EXPECT_EQ(t.witness.ground, (std::vector<std::size_t>{6, 2, 4, 5}));

  const auto b = principal_truncation(fixture::boolean(2), mask({1, 2}));
  EXPECT_TRUE(b.circuits.empty());
  EXPECT_EQ(b.witness.configuration().size(), 1u);
}

TEST(Truncation, IndependentOfSeed) {
  for (const auto& a : {fixture::a3(), fixture::x3(), fixture::x2(), fixture::non_fano()}) {
    for (const auto& f : a.lattice().flats()) {
      if (f.rank == 0) continue;
      const auto ref = principal_truncation(a, f.mask, 7, 1).circuits;
      for (std::uint64_t seed = 2; seed <= 6; ++seed)
        EXPECT_EQ(principal_truncation(a, f.mask, 7, seed).circuits, ref) << a.name() << subset_to_string(f.mask);
    }
  }
}

TEST(Truncation, LatticeOfModularTruncation) {
  const auto a = fixture::a3();
  EXPECT_TRUE(truncation_lattice_check(a, mask({1, 2, 4})));
  EXPECT_TRUE(truncation_lattice_check(a, mask({3})));
  const auto b = fixture::boolean(3);
  for (const auto& f : b.lattice().flats())
    if (f.rank > 0) EXPECT_TRUE(truncation_lattice_check(b, f.mask));
  EXPECT_THROW(truncation_lattice_check(fixture::x3(), mask({1, 2, 4})), PreconditionError);
}

// pi(A) = pi(A_X) pi(T_X) / (1+t) on modular flats.
TEST(Truncation, PoincareFactorsOverModularFlats) {
  auto batch = random_batch(15, 10);
  for (auto f : {fixture::a3, fixture::x3, fixture::x2, fixture::non_fano}) batch.push_back(f());
  for (const auto& a : batch) {
    for (const auto& f : a.lattice().flats()) {
      if (f.rank == 0 || !is_modular(a, f.mask).modular) continue;
      const auto t = principal_truncation(a, f.mask);
      const UniPoly pt = poincare(FlatLattice(t.witness.configuration()));
      const UniPoly px = restriction(a, f.mask).arrangement.poincare();
      EXPECT_EQ((px * pt).divide_exact(UniPoly{1, 1}), a.poincare()) << a.name() << subset_to_string(f.mask);
      EXPECT_TRUE(truncation_lattice_check(a, f.mask));
    }
  }
}

TEST(Hypergraph, Examples) {
  const auto b = rank2_hypergraph(fixture::boolean(4));
  EXPECT_TRUE(b.edges.empty());
  EXPECT_TRUE(b.is_3forest);

  const auto a = rank2_hypergraph(fixture::a3());
  EXPECT_EQ(a.edges.size(), 4u);
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    for (std::size_t j = i + 1; j < a.edges.size(); ++j) EXPECT_EQ(cardinality(a.edges[i] & a.edges[j]), 1u);
  EXPECT_TRUE(a.is_3graph);
  EXPECT_FALSE(a.is_3forest);
  EXPECT_EQ(a.triple_count, 4u);

  const auto fig = build_3tree_glued(figure_tree_glue());
  const auto g = rank2_hypergraph(fig);
  EXPECT_EQ(g.edges.size(), 7u);
  EXPECT_TRUE(g.is_3tree);
  EXPECT_EQ(g.triple_count, 7u);
  EXPECT_EQ(g.triple_count, fig.n() - fig.rank());

  const auto literal = rank2_hypergraph(fig, EdgeFilter::AllRankTwo);
  EXPECT_GT(literal.edges.size(), 7u);
  EXPECT_FALSE(literal.is_3graph);
}

TEST(Hypergraph, TripleCountMatchesFlatSizes) {
  for (const auto& a : random_batch(16, 20)) {
    std::size_t triples = 0;
    for (auto id : a.lattice().of_rank(2)) triples += a.lattice().flat(id).size() == 3;
    EXPECT_EQ(rank2_hypergraph(a).triple_count, triples);
  }
}

TEST(Hypergraph, CycleDetectionMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(5, 8), ne(0, 5);
    const std::size_t v = nv(rng);
    std::vector<Subset> edges;
    const std::size_t m = ne(rng);
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    while (edges.size() < m) {
      Subset e = 0;
      while (cardinality(e) < 3) e |= bit(pick(rng));
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    EXPECT_EQ(has_hypergraph_cycle(v, edges), oracle::brute_has_cycle(v, edges));
  }
}

TEST(LineClosed, Examples) {
  EXPECT_TRUE(is_line_closed(fixture::boolean(4)));
  EXPECT_TRUE(is_line_closed(fixture::a3()));
  EXPECT_FALSE(is_line_closed(generic_arrangement(4, 3, 1)));
  EXPECT_THROW(is_line_closed(generic_arrangement(17, 3, 1)), PreconditionError);
}

TEST(ThreeTree, Examples) {
  const auto one = build_3tree_glued({});
  EXPECT_EQ(one.n(), 3u);
  EXPECT_EQ(one.rank(), 2u);
  const std::vector<std::size_t> glue{0};
  const auto two = build_3tree_glued(glue);
  EXPECT_EQ(two.n(), 5u);
  EXPECT_EQ(two.rank(), 3u);
  EXPECT_EQ(two.poincare(), UniPoly({1, 1}) * power(2, 2));

  const std::vector<std::array<std::size_t, 3>> cycle{{1, 2, 3}, {3, 4, 5}, {5, 6, 1}};
  EXPECT_THROW(build_3tree(cycle), InvalidSpec);
  const std::vector<std::array<std::size_t, 3>> apart{{1, 2, 3}, {4, 5, 6}};
  EXPECT_THROW(build_3tree(apart), InvalidSpec);
  const std::vector<std::size_t> bad{5};
  EXPECT_THROW(build_3tree_glued(bad), InvalidSpec);
}

TEST(ThreeTree, RandomTreesHaveTheExpectedStructure) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto glue = random_tree_glue(1 + seed % 5, seed);
    const auto a = build_3tree_glued(glue);
    EXPECT_EQ(a.n(), 3 + 2 * glue.size());
    EXPECT_EQ(a.rank(), 2 + glue.size());
    EXPECT_TRUE(is_line_closed(a));
    const auto g = rank2_hypergraph(a);
    EXPECT_TRUE(g.is_3tree);
    EXPECT_EQ(g.triple_count, a.n() - a.rank());
    const auto chain = supersolvable_chain(a);
    ASSERT_TRUE(chain);
    for (auto e : chain->exponents) EXPECT_TRUE(e == 1 || e == 2);
  }
}

TEST(Generic, Examples) {
  const auto g4 = generic_arrangement(4, 3, 7);
  oracle::for_each_subset(4, 3, [&](const std::vector<std::size_t>& idx) {
    oracle::Mat sub;
    for (auto i : idx) sub.push_back(rows_of(g4)[i]);
    EXPECT_NE(oracle::laplace_det(sub), 0);
  });
  const auto g5 = generic_arrangement(5, 3, 7);
  const auto c = g5.circuits();
  EXPECT_EQ(c.size(), 5u);
  for (const auto& x : c) EXPECT_EQ(x.size(), 4u);
  EXPECT_THROW(generic_arrangement(3, 3, 1), PreconditionError);
  EXPECT_THROW(generic_arrangement(5, 2, 1), PreconditionError);
  EXPECT_EQ(generic_arrangement(6, 3, 9).matrix(), generic_arrangement(6, 3, 9).matrix());
}
