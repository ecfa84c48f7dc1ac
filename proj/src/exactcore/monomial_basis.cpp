#include "otalg/exactcore/monomial_basis.hpp"

#include <algorithm>
#include <array>

#include "otalg/errors.hpp"

namespace otalg {

PackedMonomial pack(const Monomial& m) {
  PackedMonomial p = 0;
  for (const auto& f : m.factors()) {
    if (f.var >= kMaxPackedVars || f.exp > kMaxPackedDegree)
      throw PreconditionError("monomial " + m.to_string() + " exceeds the packed degreewise limits");
    p |= static_cast<PackedMonomial>(f.exp) << (4 * f.var);
  }
  return p;
}

Monomial unpack(PackedMonomial p, std::size_t nvars) {
  std::vector<unsigned> e(nvars);
  for (std::size_t v = 0; v < nvars; ++v) e[v] = packed_exponent(p, v);
  return Monomial::from_exponents(e);
}

namespace {

void enumerate_rec(std::size_t var, std::size_t nvars, unsigned left, PackedMonomial acc,
                   std::vector<PackedMonomial>& out) {
  if (var + 1 == nvars) {
    out.push_back(acc | (static_cast<PackedMonomial>(left) << (4 * var)));
    return;
  }
  for (unsigned e = 0; e <= left; ++e)
    enumerate_rec(var + 1, nvars, left - e, acc | (static_cast<PackedMonomial>(e) << (4 * var)), out);
}

}  // namespace

std::vector<PackedMonomial> MonomialBasis::enumerate(std::size_t nvars, unsigned degree) {
  if (nvars > kMaxPackedVars || degree > kMaxPackedDegree)
    throw PreconditionError("degreewise computations are limited to 16 variables and degree 15");
  std::vector<PackedMonomial> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(0);
    return out;
  }
  enumerate_rec(0, nvars, degree, 0, out);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree, const TermOrder& order)
    : nvars_(nvars), degree_(degree), monomials_(enumerate(nvars, degree)) {
  if (order.nvars() != nvars) throw PreconditionError("term order has the wrong number of variables");
  const auto prio = order.priority();
  // All monomials share one degree, so grevlex reduces to its tie-break.
  if (order.kind() == TermOrder::Kind::Lex) {
    std::sort(monomials_.begin(), monomials_.end(), [&](PackedMonomial a, PackedMonomial b) {
      for (Var v : prio) {
        const unsigned ea = packed_exponent(a, v), eb = packed_exponent(b, v);
        if (ea != eb) return ea > eb;
      }
      return false;
    });
  } else {
    std::sort(monomials_.begin(), monomials_.end(), [&](PackedMonomial a, PackedMonomial b) {
      for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
        const unsigned ea = packed_exponent(a, *it), eb = packed_exponent(b, *it);
        if (ea != eb) return ea < eb;
      }
      return false;
    });
  }
  index_.reserve(monomials_.size() * 2);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
}

}  // namespace otalg
