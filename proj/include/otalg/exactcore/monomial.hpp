#ifndef OTALG_EXACTCORE_MONOMIAL_HPP
#define OTALG_EXACTCORE_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace otalg {

using Var = std::uint16_t;

// Sparse power product: only nonzero exponents are stored, sorted by variable.
class Monomial {
 public:
  struct Factor {
    Var var;
    std::uint16_t exp;
    auto operator<=>(const Factor&) const = default;
  };

  Monomial() = default;

  static Monomial variable(Var v, unsigned exp = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  // Product of the given (distinct or repeated) variables.
  static Monomial product_of(std::span<const Var> vars);

  unsigned degree() const { return degree_; }
  unsigned exponent(Var v) const;
  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  // Canonical storage order only; it is not a term order.
  auto operator<=>(const Monomial& other) const = default;
  bool operator==(const Monomial& other) const = default;

  // Renders as y1*y3^2 using 1-based names; "1" for the empty product.
  std::string to_string(std::string_view prefix = "y", int index_base = 1) const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

class TermOrder {
 public:
  enum class Kind { Lex, GrevLex };

  // priority[0] is the most significant variable.
  TermOrder(Kind kind, std::vector<Var> priority);

  // Lex with y_{n} > ... > y_{1}: the convention that makes the leading term
  // of a circuit relation the broken-circuit monomial for the natural order.
  static TermOrder lex_descending(std::size_t nvars);
  static TermOrder grevlex_descending(std::size_t nvars);

  Kind kind() const { return kind_; }
  std::span<const Var> priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  // greater means a comes first (a is larger).
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  // The ground order on variables paired with this term order: least
  // significant variable first.
  std::vector<std::size_t> induced_ground_order() const;

 private:
  Kind kind_;
  std::vector<Var> priority_;
};

}  // namespace otalg

#endif  // OTALG_EXACTCORE_MONOMIAL_HPP
