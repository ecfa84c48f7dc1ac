#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "otalg/arrmat/constructions.hpp"
#include "otalg/arrmat/modular.hpp"
#include "otalg/errors.hpp"
#include "otalg/exactcore/ratfun.hpp"
#include "otalg/nbc/broken_circuit.hpp"

using namespace otalg;

namespace {

Subset mask(std::initializer_list<std::size_t> one_based) {
  Subset s = 0;
  for (auto i : one_based) s |= bit(i - 1);
  return s;
}

std::vector<std::size_t> f_of(const UniPoly& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_num().get_ui());
  return out;
}

// Monomials of degree d whose support is a face, counted directly.
std::size_t count_face_monomials(const SimplicialComplex& c, std::size_t n, unsigned d) {
  std::size_t count = 0;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      Subset support = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] > 0) support |= bit(i);
      count += c.contains(support);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return count;
}

std::vector<Arrangement> sweep_set() {
  std::vector<Arrangement> out{fixture::a3(), fixture::x3(), fixture::x2(), fixture::non_fano(), fixture::boolean(3),
                               fixture::pencil(5)};
  std::mt19937_64 rng(21);
  for (int k = 0; k < 12; ++k) {
    std::uniform_int_distribution<std::size_t> nv(3, 6);
    out.push_back(fixture::random_graphic(rng, nv(rng)));
  }
  return out;
}

}  // namespace

TEST(SimplicialComplex, Basics) {
  const Subset facets[] = {mask({1, 2}), mask({1, 3})};
  const auto c = SimplicialComplex::from_facets(3, facets);
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(c.facets(), (std::vector<Subset>{mask({1, 2}), mask({1, 3})}));
  EXPECT_TRUE(c.is_pure());
  EXPECT_THROW(SimplicialComplex(3, {mask({1, 2})}), InvariantViolation);
  const auto s = SimplicialComplex::simplex(4, mask({1, 2}));
  const auto t = SimplicialComplex::simplex(4, mask({3, 4}));
  EXPECT_EQ(join(s, t), SimplicialComplex::simplex(4, full_set(4)));
  EXPECT_THROW(join(s, s), PreconditionError);
}

TEST(BrokenCircuit, Examples) {
  EXPECT_EQ(bc_complex(fixture::boolean(4)), SimplicialComplex::simplex(4, full_set(4)));

  const auto three = bc_complex(fixture::three_lines());
  EXPECT_EQ(three.facets(), (std::vector<Subset>{mask({1, 2}), mask({1, 3})}));

  EXPECT_EQ(bc_complex(fixture::a3()).f_vector(), (std::vector<std::size_t>{1, 6, 11, 6}));
}

TEST(BrokenCircuit, ReducedExamples) {
  EXPECT_EQ(reduced_bc_complex(fixture::boolean(4)), SimplicialComplex::simplex(4, mask({2, 3, 4})));
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto r = reduced_bc_complex(fixture::pencil(n));
    EXPECT_EQ(r.f_vector(), (std::vector<std::size_t>{1, n - 1}));
    EXPECT_FALSE(r.contains(bit(0)));
  }
  EXPECT_EQ(reduced_bc_complex(fixture::a3()).f_vector(), (std::vector<std::size_t>{1, 5, 6}));
}

TEST(BrokenCircuit, RejectsBadOrders) {
  EXPECT_THROW(bc_complex(fixture::a3(), GroundOrder{0, 1, 2}), PreconditionError);
  EXPECT_THROW(bc_complex(fixture::a3(), GroundOrder{0, 1, 2, 3, 4, 4}), PreconditionError);
}

// Whitney: f-vector of bc(A) equals the coefficients of pi, for any order.
TEST(BrokenCircuit, WhitneyUnderRandomOrders) {
  std::mt19937_64 rng(22);
  for (const auto& a : sweep_set()) {
    for (int k = 0; k < 4; ++k) {
      auto order = natural_order(a.n());
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(bc_complex(a, order).f_vector(), f_of(a.poincare())) << a.name();
      EXPECT_EQ(reduced_bc_complex(a, order).f_vector(), f_of(projective_poincare(a.poincare()))) << a.name();
    }
  }
}

TEST(StanleyReisner, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto h = sr_hilbert(SimplicialComplex::simplex(n, full_set(n)), 8);
    for (unsigned d = 0; d <= 8; ++d) EXPECT_EQ(h[d], binomial(static_cast<long>(n + d) - 1, d));
  }
  const Subset facets[] = {mask({1, 2}), mask({1, 3})};
  const auto c = SimplicialComplex::from_facets(3, facets);
  const auto h = sr_hilbert(c, 6);
  for (unsigned d = 0; d <= 6; ++d) {
    EXPECT_EQ(h[d], 2 * d + 1);
    EXPECT_EQ(h[d], count_face_monomials(c, 3, d));
  }
  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<Subset> points;
    for (std::size_t v = 0; v < m; ++v) points.push_back(bit(v));
    const auto h0 = sr_hilbert(SimplicialComplex::from_facets(m, points), 5);
    EXPECT_EQ(h0[0], 1);
    for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(h0[d], m);
  }
}

TEST(StanleyReisner, MatchesMonomialCount) {
  for (const auto& a : {fixture::a3(), fixture::x3(), fixture::three_lines()}) {
    const auto bc = bc_complex(a);
    const auto h = sr_hilbert(bc, 5);
    for (unsigned d = 0; d <= 5; ++d) EXPECT_EQ(h[d], count_face_monomials(bc, a.n(), d));
  }
}

// sr_hilbert of bc(A) against the expansion of pi(t/(1-t)).
TEST(StanleyReisner, MatchesPoincareSubstitution) {
  for (const auto& a : sweep_set()) {
    const auto h = sr_hilbert(bc_complex(a), 8);
    const auto series = series_expand(substitute_t_over_1mt(a.poincare()), 8);
    for (unsigned d = 0; d <= 8; ++d) EXPECT_EQ(Rational(h[d]), series[d]) << a.name() << " d=" << d;
  }
}

TEST(BcModular, Examples) {
  const auto a = bc_modular_check(fixture::a3(), mask({1, 2, 4}));
  EXPECT_TRUE(a.subcomplex && a.equal && a.modular);
  const auto x = bc_modular_check(fixture::x3(), mask({1, 2, 4}));
  EXPECT_TRUE(x.subcomplex);
  EXPECT_FALSE(x.equal || x.modular);
  for (std::size_t i = 1; i <= 6; ++i) {
    const auto h = bc_modular_check(fixture::a3(), mask({i}));
    EXPECT_TRUE(h.subcomplex && h.equal && h.modular);
  }
  EXPECT_THROW(bc_modular_check(fixture::a3(), 0), PreconditionError);
}

TEST(JoinDecomposition, Examples) {
  const auto b = fixture::boolean(4);
  for (const auto& f : b.lattice().flats()) EXPECT_TRUE(join_decomposition_check(b, f.mask));
  EXPECT_TRUE(join_decomposition_check(fixture::a3(), mask({1, 2, 4})));
  EXPECT_FALSE(join_decomposition_check(fixture::x3(), mask({1, 2, 4})));
}

// equal <=> modular <=> join-decomposes, on every nonzero flat; the checks
// throw on any disagreement.
TEST(BcModular, SweepAgreesWithModularity) {
  for (const auto& a : sweep_set()) {
    for (const auto& f : a.lattice().flats()) {
      if (f.rank == 0) continue;
      const auto r = bc_modular_check(a, f.mask);
      EXPECT_TRUE(r.subcomplex);
      EXPECT_EQ(r.equal, r.modular);
      EXPECT_EQ(join_decomposition_check(a, f.mask), r.modular) << a.name() << subset_to_string(f.mask);
    }
  }
}

TEST(JoinDecomposition, FVectorConvolves) {
  for (const auto& a : sweep_set()) {
    for (const auto& f : a.lattice().flats()) {
      if (!is_modular(a, f.mask).modular) continue;
      const auto bc = bc_complex(a, flat_first_order(a.n(), f.mask));
      const auto left = bc.restrict_to(f.mask).f_vector();
      const auto right = bc.restrict_to(full_set(a.n()) & ~f.mask).f_vector();
      EXPECT_EQ(convolve(left, right), bc.f_vector());
    }
  }
}
