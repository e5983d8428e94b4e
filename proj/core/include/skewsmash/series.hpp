#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewsmash/errors.hpp"
#include "skewsmash/matrix.hpp"
#include "skewsmash/polynomial.hpp"

namespace skewsmash {

// Power series truncated at degree coeffs.size() - 1.
template <class F>
struct TruncatedSeries {
  std::vector<typename F::Elem> coeffs;

  std::size_t max_degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// num/den with den(0) = 1 and gcd(num, den) = 1; this normal form is unique,
// so equality of reconstructions is coefficientwise equality.
template <class F>
struct RationalFunction {
  PolyCoeffs<F> num;
  PolyCoeffs<F> den;
};

template <class F>
void canonicalize(const F& field, RationalFunction<F>& rf) {
  poly_trim(field, rf.num);
  poly_trim(field, rf.den);
  if (poly_degree(field, rf.den) < 0) throw math_error("rational function with zero denominator");
  if (poly_degree(field, rf.num) < 0) {
    rf.den = {field.one()};
    return;
  }
  PolyCoeffs<F> g = poly_gcd(field, rf.num, rf.den);
  if (poly_degree(field, g) > 0) {
    rf.num = poly_divmod(field, rf.num, g).first;
    rf.den = poly_divmod(field, rf.den, g).first;
  }
  if (field.is_zero(rf.den[0])) {
    throw math_error("denominator vanishes at zero after normalization");
  }
  typename F::Elem inv = field.inv(rf.den[0]);
  for (auto& c : rf.num) c = field.mul(c, inv);
  for (auto& c : rf.den) c = field.mul(c, inv);
}

template <class F>
bool rational_function_equal(const F& field, const RationalFunction<F>& a,
                             const RationalFunction<F>& b) {
  if (a.num.size() != b.num.size() || a.den.size() != b.den.size()) return false;
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (!field.equal(a.num[i], b.num[i])) return false;
  }
  for (std::size_t i = 0; i < a.den.size(); ++i) {
    if (!field.equal(a.den[i], b.den[i])) return false;
  }
  return true;
}

// Series expansion of num/den to the requested truncation degree.
template <class F>
TruncatedSeries<F> expand(const F& field, const RationalFunction<F>& rf, std::size_t degree) {
  if (rf.den.empty() || field.is_zero(rf.den[0])) {
    throw math_error("cannot expand a rational function with den(0) = 0");
  }
  typename F::Elem d0_inv = field.inv(rf.den[0]);
  TruncatedSeries<F> s;
  s.coeffs.assign(degree + 1, field.zero());
  for (std::size_t k = 0; k <= degree; ++k) {
    typename F::Elem acc = k < rf.num.size() ? rf.num[k] : field.zero();
    for (std::size_t j = 1; j <= k && j < rf.den.size(); ++j) {
      field.submul(acc, rf.den[j], s.coeffs[k - j]);
    }
    s.coeffs[k] = field.mul(acc, d0_inv);
  }
  return s;
}

namespace detail {

// One linearized fit at truncation degree trunc: find num (deg <= max_num)
// and den (deg <= max_den, den(0) = 1) with series(num/den) = s up to trunc.
template <class F>
RationalFunction<F> pade_fit(const F& field, const TruncatedSeries<F>& s, std::size_t max_num,
                             std::size_t max_den, std::size_t trunc) {
  std::size_t unknowns = max_den + max_num + 1;
  Matrix<F> a(field, trunc + 1, unknowns);
  std::vector<typename F::Elem> rhs(trunc + 1, field.zero());
  for (std::size_t k = 0; k <= trunc; ++k) {
    for (std::size_t j = 1; j <= max_den && j <= k; ++j) {
      a.at(k, j - 1) = s.coeffs[k - j];
    }
    if (k <= max_num) a.at(k, max_den + k) = field.neg(field.one());
    rhs[k] = field.neg(s.coeffs[k]);
  }
  auto sol = solve_linear(field, a, rhs);
  if (!sol) {
    throw math_error("no rational function with numerator degree <= " + std::to_string(max_num) +
                     " and denominator degree <= " + std::to_string(max_den) +
                     " matches the series");
  }
  RationalFunction<F> rf;
  rf.den.assign(max_den + 1, field.zero());
  rf.den[0] = field.one();
  for (std::size_t j = 1; j <= max_den; ++j) rf.den[j] = (*sol)[j - 1];
  rf.num.assign(max_num + 1, field.zero());
  for (std::size_t k = 0; k <= max_num; ++k) rf.num[k] = (*sol)[max_den + k];
  canonicalize(field, rf);
  return rf;
}

} // namespace detail

// Stability-checked reconstruction: the fit is repeated with the last two
// coefficients dropped and both answers must agree, so a truncation that is
// still drifting is reported instead of silently trusted.
template <class F>
RationalFunction<F> pade_reconstruct(const F& field, const TruncatedSeries<F>& s,
                                     std::size_t max_num, std::size_t max_den) {
  std::size_t d = s.max_degree();
  if (s.coeffs.empty() || d < max_num + max_den + 3) {
    throw math_error("series too short: need degree >= " +
                     std::to_string(max_num + max_den + 3) + ", have " + std::to_string(d));
  }
  RationalFunction<F> full = detail::pade_fit(field, s, max_num, max_den, d);
  RationalFunction<F> window = detail::pade_fit(field, s, max_num, max_den, d - 2);
  if (!rational_function_equal(field, full, window)) {
    throw math_error("rational reconstruction unstable: truncations at degree " +
                     std::to_string(d) + " and " + std::to_string(d - 2) + " disagree");
  }
  return full;
}

// Order of the pole at t = 1: multiplicity of (1 - t) in the denominator
// minus its multiplicity in the numerator, floored at zero.
template <class F>
long pole_order_at_one(const F& field, const RationalFunction<F>& rf) {
  auto multiplicity = [&field](PolyCoeffs<F> p) {
    long m = 0;
    if (poly_degree(field, p) < 0) return m;
    PolyCoeffs<F> one_minus_t{field.one(), field.neg(field.one())};
    while (field.is_zero(poly_eval(field, p, field.one()))) {
      auto [q, r] = poly_divmod(field, p, one_minus_t);
      p = std::move(q);
      ++m;
    }
    return m;
  };
  long m = multiplicity(rf.den) - multiplicity(rf.num);
  return m > 0 ? m : 0;
}

template <class F>
struct LeadingTerm {
  long exponent; // degree of growth at infinity, deg(num) - deg(den)
  typename F::Elem coeff;
};

template <class F>
LeadingTerm<F> leading_term_at_infinity(const F& field, const RationalFunction<F>& rf) {
  int dn = poly_degree(field, rf.num);
  int dd = poly_degree(field, rf.den);
  if (dn < 0) throw math_error("leading term of the zero function is undefined");
  typename F::Elem c = field.div(rf.num[static_cast<std::size_t>(dn)],
                                 rf.den[static_cast<std::size_t>(dd)]);
  return {dn - dd, c};
}

} // namespace skewsmash
