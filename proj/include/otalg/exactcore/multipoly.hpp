#ifndef OTALG_EXACTCORE_MULTIPOLY_HPP
#define OTALG_EXACTCORE_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "otalg/exactcore/monomial.hpp"
#include "otalg/exactcore/rational.hpp"

namespace otalg {

// Sparse polynomial with rational coefficients. Zero coefficients are never
// stored, so the empty map is the zero polynomial.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  MultiPoly(const Monomial& m, const Rational& c = 1);

  static MultiPoly variable(Var v) { return MultiPoly(Monomial::variable(v)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Largest variable index that occurs plus one (0 for constants).
  std::size_t nvars_used() const;

  // The common degree of all terms, or nullopt when the polynomial is zero or
  // mixes degrees.
  std::optional<unsigned> homogeneous_degree() const;

  // Leading monomial and coefficient; precondition: nonzero.
  std::pair<Monomial, Rational> leading_term(const TermOrder& order) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& other) const = default;

  std::string to_string(std::string_view prefix = "y", int index_base = 1) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

}  // namespace otalg

#endif  // OTALG_EXACTCORE_MULTIPOLY_HPP
