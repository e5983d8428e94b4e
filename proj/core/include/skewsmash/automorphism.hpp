#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewsmash/element.hpp"
#include "skewsmash/ring.hpp"

namespace skewsmash {

// Graded automorphism sending x_i to scalars[i] * x_{perm[i]} (0-indexed).
template <class F>
struct MonomialAutomorphism {
  std::vector<unsigned> perm;
  std::vector<typename F::Elem> scalars;
};

template <class F>
MonomialAutomorphism<F> identity_automorphism(const F& field, unsigned n) {
  MonomialAutomorphism<F> g;
  g.perm.resize(n);
  g.scalars.assign(n, field.one());
  for (unsigned i = 0; i < n; ++i) g.perm[i] = i;
  return g;
}

template <class F>
bool automorphism_is_identity(const F& field, const MonomialAutomorphism<F>& g) {
  for (unsigned i = 0; i < g.perm.size(); ++i) {
    if (g.perm[i] != i) return false;
    if (!field.equal(g.scalars[i], field.one())) return false;
  }
  return true;
}

template <class F>
bool automorphism_equal(const F& field, const MonomialAutomorphism<F>& a,
                        const MonomialAutomorphism<F>& b) {
  if (a.perm != b.perm) return false;
  for (std::size_t i = 0; i < a.scalars.size(); ++i) {
    if (!field.equal(a.scalars[i], b.scalars[i])) return false;
  }
  return true;
}

// (g o h)(x_i) = g(h(x_i)) = scalars_h[i] * scalars_g[perm_h[i]] * x_{perm_g[perm_h[i]]}.
template <class F>
MonomialAutomorphism<F> compose(const F& field, const MonomialAutomorphism<F>& g,
                                const MonomialAutomorphism<F>& h) {
  unsigned n = static_cast<unsigned>(g.perm.size());
  if (h.perm.size() != n) throw config_error("automorphism size mismatch");
  MonomialAutomorphism<F> out;
  out.perm.resize(n);
  out.scalars.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    out.perm[i] = g.perm[h.perm[i]];
    out.scalars[i] = field.mul(h.scalars[i], g.scalars[h.perm[i]]);
  }
  return out;
}

template <class F>
MonomialAutomorphism<F> inverse(const F& field, const MonomialAutomorphism<F>& g) {
  unsigned n = static_cast<unsigned>(g.perm.size());
  MonomialAutomorphism<F> out;
  out.perm.resize(n);
  out.scalars.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    out.perm[g.perm[i]] = i;
    out.scalars[g.perm[i]] = field.inv(g.scalars[i]);
  }
  return out;
}

// A monomial map extends to a ring automorphism exactly when it preserves
// the commutation scalars: q(perm(i), perm(j)) = q(i, j) for all i, j.
template <class F>
bool preserves_relations(const SkewPolyRing<F>& ring, const MonomialAutomorphism<F>& g) {
  unsigned n = ring.var_count();
  if (g.perm.size() != n || g.scalars.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (unsigned i = 0; i < n; ++i) {
    if (g.perm[i] >= n || seen[g.perm[i]]) return false;
    seen[g.perm[i]] = true;
    if (ring.field().is_zero(g.scalars[i])) return false;
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (!ring.field().equal(ring.q(g.perm[i], g.perm[j]), ring.q(i, j))) return false;
    }
  }
  return true;
}

// Image of a monomial: g(x^a) = scalar * x^b with b[perm[i]] = a[i]. The
// scalar combines the generator scalars with the q factors from reordering
// x_{perm(1)}^{a_1} ... x_{perm(n)}^{a_n} into normal order.
template <class F>
std::pair<typename F::Elem, Monomial> apply_automorphism(
    const SkewPolyRing<F>& ring, const MonomialAutomorphism<F>& g, const Monomial& m) {
  const F& field = ring.field();
  unsigned n = ring.var_count();
  typename F::Elem scalar = field.one();
  Monomial target(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (m[i] != 0) {
      scalar = field.mul(scalar, field_pow(field, g.scalars[i], m[i]));
    }
    target[g.perm[i]] = m[i];
  }
  for (unsigned i = 0; i < n; ++i) {
    if (m[i] == 0) continue;
    for (unsigned j = i + 1; j < n; ++j) {
      if (m[j] == 0 || g.perm[i] < g.perm[j]) continue;
      scalar = field.mul(scalar,
                         field_pow(field, ring.q(g.perm[i], g.perm[j]),
                                   static_cast<unsigned long>(m[i]) * m[j]));
    }
  }
  return {std::move(scalar), std::move(target)};
}

template <class F>
AlgebraElement<F> apply_automorphism(const SkewPolyRing<F>& ring,
                                     const MonomialAutomorphism<F>& g,
                                     const AlgebraElement<F>& a) {
  AlgebraElement<F> out;
  for (const auto& [m, c] : a.terms()) {
    auto [scalar, target] = apply_automorphism(ring, g, m);
    out.add_term(ring.field(), std::move(target), ring.field().mul(c, scalar));
  }
  return out;
}

template <class F>
std::string automorphism_to_string(const F& field, const MonomialAutomorphism<F>& g) {
  std::string out = "[";
  for (unsigned i = 0; i < g.perm.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(i + 1) + " -> (" + field.to_string(g.scalars[i]) +
           ")*x" + std::to_string(g.perm[i] + 1);
  }
  out += "]";
  return out;
}

} // namespace skewsmash
