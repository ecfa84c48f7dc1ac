#include "otalg/exactcore/ratfun.hpp"

#include <algorithm>

#include "otalg/errors.hpp"

namespace otalg {

RatFun::RatFun(UniPoly numerator, UniPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coefficient(0) == 0) throw PoleAtOrigin("denominator " + den_.to_string() + " vanishes at t = 0");
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun RatFun::reciprocal() const { return RatFun(den_, num_); }

RatFun RatFun::negate_variable() const { return RatFun(num_.negate_variable(), den_.negate_variable()); }

std::string RatFun::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

std::vector<Rational> series_expand(const UniPoly& numerator, const UniPoly& denominator, std::size_t max_degree) {
  const Rational d0 = denominator.coefficient(0);
  if (d0 == 0) throw PoleAtOrigin("denominator " + denominator.to_string() + " vanishes at t = 0");
  // den * f = num, solved coefficient by coefficient.
  std::vector<Rational> f(max_degree + 1);
  const auto dd = static_cast<std::size_t>(std::max(denominator.degree(), 0));
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Rational acc = numerator.coefficient(k);
    for (std::size_t j = 1; j <= std::min(k, dd); ++j) acc -= denominator.coefficient(j) * f[k - j];
    f[k] = acc / d0;
  }
  return f;
}

std::vector<Rational> series_expand(const RatFun& f, std::size_t max_degree) {
  return series_expand(f.numerator(), f.denominator(), max_degree);
}

RatFun substitute_t_over_1mt(const UniPoly& p) {
  if (p.is_zero()) return RatFun();
  const auto d = static_cast<unsigned>(p.degree());
  const UniPoly one_minus_t{1, -1};
  const UniPoly t{0, 1};
  UniPoly num;
  for (unsigned k = 0; k <= d; ++k) {
    if (p.coefficient(k) == 0) continue;
    num += t.pow(k) * one_minus_t.pow(d - k) * p.coefficient(k);
  }
  return RatFun(std::move(num), one_minus_t.pow(d));
}

std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<Rational> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  }
  return out;
}

}  // namespace otalg
