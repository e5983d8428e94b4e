#pragma once

#include <cstdint>
#include <string>

#include "skewsmash/cyclotomic.hpp"
#include "skewsmash/prime_field.hpp"
#include "skewsmash/rational.hpp"

namespace skewsmash {

// The three coefficient fields share one calling convention: a field object
// owns all arithmetic and elements are plain values. Generic code takes the
// field as a template parameter and never touches element internals.
class RationalField {
public:
  using Elem = Rational;

  std::string name() const { return "rational"; }

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }
  Elem from_rational(const Rational& r) const { return r; }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw math_error("division by zero in rationals");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw math_error("division by zero in rationals");
    return a / b;
  }

  void add_assign(Elem& acc, const Elem& a) const { acc += a; }
  // acc -= a * b
  void submul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }

  std::string to_string(const Elem& a) const { return rational_to_string(a); }
};

template <class F>
typename F::Elem field_pow(const F& field, typename F::Elem base, unsigned long e) {
  typename F::Elem acc = field.one();
  while (e > 0) {
    if (e & 1) acc = field.mul(acc, base);
    base = field.mul(base, base);
    e >>= 1;
  }
  return acc;
}

// Parity-aware power for scalars known to be +-1 shortcuts nothing here;
// kept generic so cyclotomic and modular scalars go through the same path.
template <class F>
typename F::Elem field_int_pow(const F& field, const typename F::Elem& base, long e) {
  if (e >= 0) return field_pow(field, base, static_cast<unsigned long>(e));
  return field.inv(field_pow(field, base, static_cast<unsigned long>(-e)));
}

} // namespace skewsmash
