#ifndef OTALG_EXACTCORE_UNIPOLY_HPP
#define OTALG_EXACTCORE_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "otalg/exactcore/rational.hpp"

namespace otalg {

// Dense univariate polynomial in t; trailing zero coefficients are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);
  // (a + b t)^k
  static UniPoly linear_power(const Rational& a, const Rational& b, unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational operator()(const Rational& t) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c);
  UniPoly pow(unsigned k) const;

  // p(-t)
  UniPoly negate_variable() const;

  // Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  // Throws InvariantViolation when the division leaves a remainder.
  UniPoly divide_exact(const UniPoly& divisor) const;

  bool operator==(const UniPoly& other) const = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace otalg

#endif  // OTALG_EXACTCORE_UNIPOLY_HPP
