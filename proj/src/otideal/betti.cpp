#include "otalg/otideal/betti.hpp"

#include <algorithm>

#include "otalg/errors.hpp"
#include "otalg/exactcore/ratfun.hpp"

namespace otalg {

namespace {

SeriesTable zeros(std::size_t rows, std::size_t cols) { return SeriesTable(rows, std::vector<Integer>(cols, 0)); }

SeriesTable multiply(const SeriesTable& a, const SeriesTable& b) {
  const std::size_t rows = a.size(), cols = a.front().size();
  auto out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; i + k < rows; ++k)
        for (std::size_t m = 0; j + m < cols; ++m)
          if (b[k][m] != 0) out[i + k][j + m] += a[i][j] * b[k][m];
    }
  return out;
}

// (1+st)^n and s^2 t^l Q(st), both truncated.
SeriesTable numerator(std::size_t n, std::size_t rows, std::size_t cols) {
  auto out = zeros(rows, cols);
  for (std::size_t k = 0; k <= n && k < rows && k < cols; ++k) out[k][k] = binomial(static_cast<long>(n), static_cast<long>(k));
  return out;
}

SeriesTable correction(const UniPoly& q, std::size_t l, std::size_t rows, std::size_t cols) {
  auto out = zeros(rows, cols);
  for (std::size_t p = 0; p < q.coefficients().size(); ++p)
    if (p + 2 < rows && p + l < cols) out[p + 2][p + l] = q.coefficients()[p].get_num();
  return out;
}

SeriesTable divide(const UniPoly& q, std::size_t n, std::size_t l, std::size_t rows, std::size_t cols) {
  auto p = numerator(n, rows, cols);
  const auto& qc = q.coefficients();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < qc.size(); ++k)
        if (i >= k + 2 && j >= k + l) p[i][j] += qc[k].get_num() * p[i - k - 2][j - k - l];
  return p;
}

SeriesTable geometric(const UniPoly& q, std::size_t n, std::size_t l, std::size_t rows, std::size_t cols) {
  const auto e = correction(q, l, rows, cols);
  auto sum = zeros(rows, cols);
  auto power = zeros(rows, cols);
  power[0][0] = 1;
  // Each factor raises the s-degree by at least 2.
  for (std::size_t k = 0; 2 * k < rows; ++k) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) sum[i][j] += power[i][j];
    power = multiply(power, e);
  }
  return multiply(numerator(n, rows, cols), sum);
}

}  // namespace

UniPoly generic_q(std::size_t n, std::size_t l) {
  std::vector<Rational> c;
  for (std::size_t p = 0; p + l + 1 <= n; ++p)
    c.emplace_back(binomial(static_cast<long>(n) - 1, static_cast<long>(l + p)) *
                   binomial(static_cast<long>(l + p) - 1, static_cast<long>(l) - 1));
  return UniPoly(std::move(c));
}

UniPoly generic_q_generating(std::size_t n, std::size_t l) {
  // f[k] is the coefficient of y^k, a table over x^a t^b with a <= l, b <= n.
  const std::size_t xs = l + 1, ts = n + 1;
  std::vector<SeriesTable> f(n + 1, zeros(xs, ts));
  // Denominator (1-y)(1-(1+t+x)y) = 1 - (2+t+x) y + (1+t+x) y^2,
  // numerator y - (1+t) y^2.
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = f[k];
    if (k == 1) cur[0][0] += 1;
    if (k == 2) {
      cur[0][0] -= 1;
      cur[0][1] -= 1;
    }
    const auto& p1 = f[k - 1];
    for (std::size_t a = 0; a < xs; ++a)
      for (std::size_t b = 0; b < ts; ++b) {
        if (p1[a][b] == 0) continue;
        cur[a][b] += 2 * p1[a][b];
        if (b + 1 < ts) cur[a][b + 1] += p1[a][b];
        if (a + 1 < xs) cur[a + 1][b] += p1[a][b];
      }
    if (k >= 2) {
      const auto& p2 = f[k - 2];
      for (std::size_t a = 0; a < xs; ++a)
        for (std::size_t b = 0; b < ts; ++b) {
          if (p2[a][b] == 0) continue;
          cur[a][b] -= p2[a][b];
          if (b + 1 < ts) cur[a][b + 1] -= p2[a][b];
          if (a + 1 < xs) cur[a + 1][b] -= p2[a][b];
        }
    }
  }
  std::vector<Rational> c;
  for (std::size_t b = 0; b < ts; ++b) c.emplace_back(f[n][l][b]);
  return UniPoly(std::move(c));
}

UniPoly uniform_poincare(std::size_t n, std::size_t l) {
  std::vector<Rational> c;
  Rational alternating = 0;
  for (std::size_t k = 0; k < l; ++k) {
    c.emplace_back(binomial(static_cast<long>(n), static_cast<long>(k)));
    alternating += k % 2 ? -c.back() : c.back();
  }
  // pi(-1) = alternating + c_l (-1)^l = 0
  c.push_back(l % 2 ? alternating : -alternating);
  return UniPoly(std::move(c));
}

BettiData generic_betti(std::size_t n, std::size_t l, unsigned s_degree, unsigned t_degree) {
  if (!(n > l && l >= 3)) throw PreconditionError("generic_betti needs n > l >= 3");
  BettiData r;
  r.n = n;
  r.l = l;
  r.s_degree = s_degree;
  r.t_degree = t_degree;
  r.q = generic_q(n, l);
  r.q_generating = generic_q_generating(n, l);
  r.q_matches = r.q == r.q_generating;

  const std::size_t rows = s_degree + 1, cols = t_degree + 1;
  r.p = divide(r.q, n, l, rows, cols);
  r.p_matches_geometric = r.p == geometric(r.q, n, l, rows, cols);

  // s-degree never exceeds t-degree, so t_degree + 1 rows see all of P(-1, t).
  const auto full = divide(r.q, n, l, cols, cols);
  std::vector<Rational> euler(cols, Rational(0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) euler[j] += i % 2 ? Rational(-full[i][j]) : Rational(full[i][j]);
  const auto h = series_expand(substitute_t_over_1mt(uniform_poincare(n, l)), t_degree);
  const auto prod = cauchy_product(euler, h);
  r.euler_matches = prod[0] == 1 && std::all_of(prod.begin() + 1, prod.begin() + cols, [](const Rational& x) { return x == 0; });
  return r;
}

}  // namespace otalg
