#include "otalg/exactcore/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "otalg/errors.hpp"

namespace otalg {

Monomial Monomial::variable(Var v, unsigned exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({v, static_cast<std::uint16_t>(exp)});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] == 0) continue;
    m.factors_.push_back({static_cast<Var>(v), static_cast<std::uint16_t>(exponents[v])});
    m.degree_ += exponents[v];
  }
  return m;
}

Monomial Monomial::product_of(std::span<const Var> vars) {
  std::map<Var, unsigned> counts;
  for (Var v : vars) ++counts[v];
  Monomial m;
  for (const auto& [v, e] : counts) {
    m.factors_.push_back({v, static_cast<std::uint16_t>(e)});
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, static_cast<std::uint16_t>(a->exp + b->exp)});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_) {
    if (other.exponent(f.var) < f.exp) return false;
  }
  return true;
}

std::string Monomial::to_string(std::string_view prefix, int index_base) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    s += prefix;
    s += std::to_string(static_cast<int>(f.var) + index_base);
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

TermOrder::TermOrder(Kind kind, std::vector<Var> priority) : kind_(kind), priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (Var v : priority_) {
    if (v >= priority_.size() || seen[v]) throw PreconditionError("term order priority is not a permutation");
    seen[v] = true;
  }
}

TermOrder TermOrder::lex_descending(std::size_t nvars) {
  std::vector<Var> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = static_cast<Var>(nvars - 1 - i);
  return TermOrder(Kind::Lex, std::move(p));
}

TermOrder TermOrder::grevlex_descending(std::size_t nvars) {
  std::vector<Var> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = static_cast<Var>(nvars - 1 - i);
  return TermOrder(Kind::GrevLex, std::move(p));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (Var v : priority_) {
      const unsigned ea = a.exponent(v), eb = b.exponent(v);
      if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    const unsigned ea = a.exponent(*it), eb = b.exponent(*it);
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> TermOrder::induced_ground_order() const {
  return std::vector<std::size_t>(priority_.rbegin(), priority_.rend());
}

}  // namespace otalg
