#ifndef OTALG_EXACTCORE_RATFUN_HPP
#define OTALG_EXACTCORE_RATFUN_HPP

#include <string>
#include <vector>

#include "otalg/exactcore/unipoly.hpp"

namespace otalg {

// numerator / denominator with denominator(0) != 0, i.e. a rational function
// that has a power series expansion at t = 0.
class RatFun {
 public:
  RatFun() : num_(), den_(UniPoly::constant(1)) {}
  explicit RatFun(UniPoly numerator) : num_(std::move(numerator)), den_(UniPoly::constant(1)) {}
  // Throws PoleAtOrigin when denominator(0) == 0.
  RatFun(UniPoly numerator, UniPoly denominator);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  // 1/f; throws PoleAtOrigin when numerator(0) == 0.
  RatFun reciprocal() const;
  // f(-t)
  RatFun negate_variable() const;

  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

// First D+1 Taylor coefficients of f at 0.
std::vector<Rational> series_expand(const RatFun& f, std::size_t max_degree);
// Same, for a numerator/denominator pair that may not satisfy the RatFun
// invariant; throws PoleAtOrigin when denominator(0) == 0.
std::vector<Rational> series_expand(const UniPoly& numerator, const UniPoly& denominator, std::size_t max_degree);

// p(t/(1-t)) with denominator (1-t)^deg(p).
RatFun substitute_t_over_1mt(const UniPoly& p);

// Cauchy product of two truncated series, truncated to the shorter length.
std::vector<Rational> cauchy_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace otalg

#endif  // OTALG_EXACTCORE_RATFUN_HPP
