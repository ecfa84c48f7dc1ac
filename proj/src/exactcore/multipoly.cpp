#include "otalg/exactcore/multipoly.hpp"

#include <stdexcept>

namespace otalg {

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t MultiPoly::nvars_used() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) n = std::max<std::size_t>(n, f.var + 1u);
  }
  return n;
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

std::pair<Monomial, Rational> MultiPoly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return *best;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, a] : terms_) a *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string(std::string_view prefix, int index_base) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      s += otalg::to_string(mag);
    } else {
      if (mag != 1) s += otalg::to_string(mag) + "*";
      s += m.to_string(prefix, index_base);
    }
  }
  return s;
}

}  // namespace otalg
