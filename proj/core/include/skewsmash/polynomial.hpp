#pragma once

#include <utility>
#include <vector>

#include "skewsmash/errors.hpp"

namespace skewsmash {

// Dense univariate polynomials with ascending coefficients. The zero
// polynomial is the empty vector; helpers keep results trimmed.
template <class F>
using PolyCoeffs = std::vector<typename F::Elem>;

template <class F>
int poly_degree(const F& field, const PolyCoeffs<F>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!field.is_zero(p[static_cast<std::size_t>(i)])) return i;
  }
  return -1;
}

template <class F>
void poly_trim(const F& field, PolyCoeffs<F>& p) {
  p.resize(static_cast<std::size_t>(poly_degree(field, p) + 1), field.zero());
}

template <class F>
PolyCoeffs<F> poly_add(const F& field, const PolyCoeffs<F>& a, const PolyCoeffs<F>& b) {
  PolyCoeffs<F> out(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) field.add_assign(out[i], b[i]);
  poly_trim(field, out);
  return out;
}

template <class F>
PolyCoeffs<F> poly_sub(const F& field, const PolyCoeffs<F>& a, const PolyCoeffs<F>& b) {
  PolyCoeffs<F> out(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = field.sub(out[i], b[i]);
  poly_trim(field, out);
  return out;
}

template <class F>
PolyCoeffs<F> poly_mul(const F& field, const PolyCoeffs<F>& a, const PolyCoeffs<F>& b) {
  if (a.empty() || b.empty()) return {};
  PolyCoeffs<F> out(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (field.is_zero(b[j])) continue;
      field.add_assign(out[i + j], field.mul(a[i], b[j]));
    }
  }
  poly_trim(field, out);
  return out;
}

template <class F>
std::pair<PolyCoeffs<F>, PolyCoeffs<F>> poly_divmod(const F& field, PolyCoeffs<F> a,
                                                    const PolyCoeffs<F>& b) {
  int db = poly_degree(field, b);
  if (db < 0) throw math_error("polynomial division by zero");
  int da = poly_degree(field, a);
  if (da < db) {
    poly_trim(field, a);
    return {PolyCoeffs<F>{}, std::move(a)};
  }
  PolyCoeffs<F> q(static_cast<std::size_t>(da - db + 1), field.zero());
  typename F::Elem lead_inv = field.inv(b[static_cast<std::size_t>(db)]);
  for (int k = da; k >= db; --k) {
    typename F::Elem c = a[static_cast<std::size_t>(k)];
    if (field.is_zero(c)) continue;
    c = field.mul(c, lead_inv);
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      field.submul(a[static_cast<std::size_t>(k - db + j)], c, b[static_cast<std::size_t>(j)]);
    }
  }
  poly_trim(field, a);
  return {std::move(q), std::move(a)};
}

template <class F>
typename F::Elem poly_eval(const F& field, const PolyCoeffs<F>& p, const typename F::Elem& x) {
  typename F::Elem acc = field.zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = field.mul(acc, x);
    field.add_assign(acc, p[i]);
  }
  return acc;
}

// Monic greatest common divisor.
template <class F>
PolyCoeffs<F> poly_gcd(const F& field, PolyCoeffs<F> a, PolyCoeffs<F> b) {
  poly_trim(field, a);
  poly_trim(field, b);
  while (poly_degree(field, b) >= 0) {
    auto [q, r] = poly_divmod(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = poly_degree(field, a);
  if (d >= 0) {
    typename F::Elem inv = field.inv(a[static_cast<std::size_t>(d)]);
    for (auto& c : a) c = field.mul(c, inv);
  }
  return a;
}

// Extended Euclid: g monic, u*a + v*b = g.
template <class F>
struct PolyEgcd {
  PolyCoeffs<F> g, u, v;
};

template <class F>
PolyEgcd<F> poly_extended_gcd(const F& field, PolyCoeffs<F> a, PolyCoeffs<F> b) {
  poly_trim(field, a);
  poly_trim(field, b);
  PolyCoeffs<F> u0{field.one()}, v0{}, u1{}, v1{field.one()};
  while (poly_degree(field, b) >= 0) {
    auto [q, r] = poly_divmod(field, a, b);
    PolyCoeffs<F> u2 = poly_sub(field, u0, poly_mul(field, q, u1));
    PolyCoeffs<F> v2 = poly_sub(field, v0, poly_mul(field, q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  int d = poly_degree(field, a);
  if (d < 0) throw math_error("gcd of zero polynomials");
  typename F::Elem inv = field.inv(a[static_cast<std::size_t>(d)]);
  for (auto& c : a) c = field.mul(c, inv);
  for (auto& c : u0) c = field.mul(c, inv);
  for (auto& c : v0) c = field.mul(c, inv);
  return {std::move(a), std::move(u0), std::move(v0)};
}

} // namespace skewsmash
