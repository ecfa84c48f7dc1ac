#include "otalg/nbc/complex.hpp"

#include <algorithm>
#include <set>

#include "otalg/errors.hpp"

namespace otalg {

namespace {

bool face_less(Subset a, Subset b) {
  const auto ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<Subset> faces)
    : n_(vertices), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), face_less);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  for (Subset f : faces_) {
    if (!is_subset(f, full_set(n_))) throw InvariantViolation("face " + subset_to_string(f) + " uses a missing vertex");
    for (auto v : elements_of(f))
      if (!contains(f & ~bit(v))) throw InvariantViolation("face set is not closed under subsets at " + subset_to_string(f));
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices, std::span<const Subset> facets) {
  std::set<Subset> all;
  for (Subset f : facets) {
    // Enumerate all submasks of f.
    for (Subset s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return SimplicialComplex(vertices, std::vector<Subset>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t vertices, Subset on) {
  const Subset facet[] = {on};
  return from_facets(vertices, facet);
}

bool SimplicialComplex::contains(Subset face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
}

std::vector<Subset> SimplicialComplex::facets() const {
  std::vector<Subset> out;
  for (Subset f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < n_ && maximal; ++v)
      if (!otalg::contains(f, v) && contains(f | bit(v))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(max_face_size() + 1, 0);
  if (faces_.empty()) return {};
  for (Subset s : faces_) ++f[cardinality(s)];
  return f;
}

std::size_t SimplicialComplex::max_face_size() const { return faces_.empty() ? 0 : cardinality(faces_.back()); }

bool SimplicialComplex::is_pure() const {
  const std::size_t top = max_face_size();
  for (Subset f : facets())
    if (cardinality(f) != top) return false;
  return true;
}

SimplicialComplex SimplicialComplex::restrict_to(Subset w) const {
  std::vector<Subset> out;
  for (Subset f : faces_)
    if (is_subset(f, w)) out.push_back(f);
  return SimplicialComplex(n_, std::move(out));
}

SimplicialComplex SimplicialComplex::deletion(std::size_t v) const { return restrict_to(full_set(n_) & ~bit(v)); }

SimplicialComplex SimplicialComplex::cone(std::size_t apex) const {
  std::vector<Subset> out = faces_;
  for (Subset f : faces_) {
    if (otalg::contains(f, apex)) throw PreconditionError("cone apex already a vertex of a face");
    out.push_back(f | bit(apex));
  }
  return SimplicialComplex(std::max(n_, apex + 1), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  Subset va = 0, vb = 0;
  for (Subset f : a.faces()) va |= f;
  for (Subset f : b.faces()) vb |= f;
  if (va & vb) throw PreconditionError("join of complexes with overlapping vertices");
  std::vector<Subset> out;
  for (Subset f : a.faces())
    for (Subset g : b.faces()) out.push_back(f | g);
  return SimplicialComplex(std::max(a.vertices(), b.vertices()), std::move(out));
}

std::vector<Integer> sr_hilbert(const SimplicialComplex& c, unsigned d_max) {
  const auto f = c.f_vector();
  std::vector<Integer> h(d_max + 1, 0);
  h[0] = 1;
  for (unsigned d = 1; d <= d_max; ++d)
    for (std::size_t k = 1; k < f.size(); ++k) h[d] += f[k] * binomial(static_cast<long>(d) - 1, static_cast<long>(k) - 1);
  return h;
}

std::vector<std::size_t> convolve(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace otalg
