#pragma once

#include <optional>
#include <vector>

#include "skewsmash/finite_group.hpp"
#include "skewsmash/matrix.hpp"
#include "skewsmash/series.hpp"

namespace skewsmash {

inline std::vector<std::vector<unsigned>> permutation_cycles(const std::vector<unsigned>& perm) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cycle;
    unsigned cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = perm[cur];
      if (cur >= perm.size()) throw config_error("not a permutation");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline unsigned odd_cycle_count(const std::vector<unsigned>& perm) {
  unsigned odd = 0;
  for (const auto& c : permutation_cycles(perm)) {
    if (c.size() % 2 == 1) ++odd;
  }
  return odd;
}

// Trace of the automorphism on the degree-d slice. Only monomials whose
// exponent vector is constant along each permutation cycle contribute, so
// the sum runs over weight assignments to the cycles.
template <class F>
typename F::Elem trace_on_degree(const SkewPolyRing<F>& ring,
                                 const MonomialAutomorphism<F>& g, unsigned d) {
  const F& field = ring.field();
  if (automorphism_is_identity(field, g)) {
    return field.from_int(static_cast<long>(ring.dim_degree(d)));
  }
  auto cycles = permutation_cycles(g.perm);
  typename F::Elem total = field.zero();
  Monomial m(ring.var_count(), 0);
  fixed_monomial_sum(ring, g, cycles, 0, d, m, total);
  return total;
}

template <class F>
void fixed_monomial_sum(const SkewPolyRing<F>& ring, const MonomialAutomorphism<F>& g,
                        const std::vector<std::vector<unsigned>>& cycles, std::size_t idx,
                        unsigned remaining, Monomial& m, typename F::Elem& total) {
  const F& field = ring.field();
  if (idx == cycles.size()) {
    if (remaining != 0) return;
    auto [scalar, target] = apply_automorphism(ring, g, m);
    if (target != m) throw math_error("monomial expected to be fixed was moved");
    field.add_assign(total, scalar);
    return;
  }
  unsigned len = static_cast<unsigned>(cycles[idx].size());
  for (unsigned w = 0; w * len <= remaining; ++w) {
    for (unsigned v : cycles[idx]) m[v] = w;
    fixed_monomial_sum(ring, g, cycles, idx + 1, remaining - w * len, m, total);
  }
  for (unsigned v : cycles[idx]) m[v] = 0;
}

template <class F>
TruncatedSeries<F> trace_series(const SkewPolyRing<F>& ring,
                                const MonomialAutomorphism<F>& g, unsigned max_degree) {
  TruncatedSeries<F> s;
  s.coeffs.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    s.coeffs.push_back(trace_on_degree(ring, g, d));
  }
  return s;
}

// Rational form of the trace generating function, reconstructed from the
// series with numerator and denominator degree caps n + 2.
template <class F>
RationalFunction<F> trace_rational_function(const SkewPolyRing<F>& ring,
                                            const MonomialAutomorphism<F>& g,
                                            std::optional<unsigned> series_degree = {}) {
  unsigned n = ring.var_count();
  unsigned cap = n + 2;
  unsigned D = series_degree.value_or(2 * cap + 3);
  if (D < 2 * cap + 3) D = 2 * cap + 3;
  auto s = trace_series(ring, g, D);
  return pade_reconstruct(ring.field(), s, cap, cap);
}

// var_count minus the pole order of the trace at t = 1.
template <class F>
long reflection_number(const SkewPolyRing<F>& ring, const MonomialAutomorphism<F>& g,
                       std::optional<unsigned> series_degree = {}) {
  auto rf = trace_rational_function(ring, g, series_degree);
  unsigned pole = pole_order_at_one(ring.field(), rf);
  return static_cast<long>(ring.var_count()) - static_cast<long>(pole);
}

// Minimum reflection number over the nonidentity elements.
template <class F>
long reflection_number_group(const SkewPolyRing<F>& ring, const FiniteGroup<F>& group,
                             std::optional<unsigned> series_degree = {}) {
  if (group.size() < 2) {
    throw config_error("reflection number needs a nontrivial group");
  }
  long best = 0;
  bool first = true;
  for (std::size_t i = 1; i < group.size(); ++i) {
    long r = reflection_number(ring, group.element(i), series_degree);
    if (first || r < best) {
      best = r;
      first = false;
    }
  }
  return best;
}

// Scalar c in Tr(g, t) = c * t^{-n} + lower order terms at infinity gives
// the homological determinant (-1)^n / c. The trace of a graded
// automorphism of this ring always has total degree -n at infinity.
template <class F>
typename F::Elem homological_determinant(const SkewPolyRing<F>& ring,
                                         const MonomialAutomorphism<F>& g,
                                         std::optional<unsigned> series_degree = {}) {
  const F& field = ring.field();
  auto rf = trace_rational_function(ring, g, series_degree);
  auto lt = leading_term_at_infinity(field, rf);
  long n = static_cast<long>(ring.var_count());
  if (lt.exponent != -n) {
    throw math_error("trace series does not vanish to order " + std::to_string(n) +
                     " at infinity; homological determinant undefined");
  }
  typename F::Elem sign = (n % 2 == 0) ? field.one() : field.from_int(-1);
  return field.div(sign, lt.coeff);
}

template <class F>
bool hdet_is_trivial(const SkewPolyRing<F>& ring, const FiniteGroup<F>& group,
                     std::optional<unsigned> series_degree = {}) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto h = homological_determinant(ring, group.element(i), series_degree);
    if (!ring.field().equal(h, ring.field().one())) return false;
  }
  return true;
}

// Average of the element traces; the Hilbert series of the fixed ring when
// the group order is invertible.
template <class F>
TruncatedSeries<F> molien_series(const SkewPolyRing<F>& ring, const FiniteGroup<F>& group,
                                 unsigned max_degree) {
  const F& field = ring.field();
  typename F::Elem order = field.from_int(static_cast<long>(group.size()));
  if (field.is_zero(order)) {
    throw math_error("group order vanishes in the field; Molien series undefined");
  }
  typename F::Elem inv_order = field.inv(order);
  TruncatedSeries<F> out;
  out.coeffs.assign(max_degree + 1, field.zero());
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto s = trace_series(ring, group.element(i), max_degree);
    for (unsigned d = 0; d <= max_degree; ++d) {
      field.add_assign(out.coeffs[d], s.coeffs[d]);
    }
  }
  for (auto& c : out.coeffs) c = field.mul(c, inv_order);
  return out;
}

// Dimension of the degree-d invariants, computed as the rank of the summed
// action matrix (a nonzero multiple of the averaging projector).
template <class F>
std::size_t invariant_dimension_direct(const SkewPolyRing<F>& ring,
                                       const FiniteGroup<F>& group, unsigned d) {
  const F& field = ring.field();
  if (field.is_zero(field.from_int(static_cast<long>(group.size())))) {
    throw math_error("group order vanishes in the field; averaging projector undefined");
  }
  auto basis = ring.degree_basis(d);
  std::size_t dim = basis.size();
  Matrix<F> mat(field, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto [scalar, target] = apply_automorphism(ring, group.element(i), basis[r]);
      std::size_t c = ring.monomial_rank(target);
      field.add_assign(mat.at(r, c), scalar);
    }
  }
  return mat.rank();
}

} // namespace skewsmash
