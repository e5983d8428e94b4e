#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewsmash/rational.hpp"

namespace skewsmash {

unsigned euler_phi(unsigned n);

// Monic minimal polynomial of a primitive n-th root of unity over Q,
// ascending coefficients, length euler_phi(n) + 1.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

// Residue in Q[z]/(Phi_order). coeffs has length euler_phi(order) and is
// always reduced, so componentwise equality is field equality.
struct CyclotomicNumber {
  unsigned order = 1;
  std::vector<Rational> coeffs;

  bool operator==(const CyclotomicNumber& other) const {
    return order == other.order && coeffs == other.coeffs;
  }
};

// Arithmetic context for Q(zeta_order). All binary operations require both
// operands to carry the field's order; mixing orders is an error.
class CyclotomicField {
public:
  using Elem = CyclotomicNumber;

  explicit CyclotomicField(unsigned order);

  unsigned order() const { return order_; }
  unsigned degree() const { return phi_; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  std::string name() const { return "cyclotomic(" + std::to_string(order_) + ")"; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_rational(const Rational& r) const;
  // zeta^k for any integer k (negative exponents allowed).
  Elem root_power(long k) const;
  Elem generator() const { return root_power(1); }

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  int cmp(const Elem& a, const Elem& b) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;

  void add_assign(Elem& acc, const Elem& a) const;
  // acc -= a * b
  void submul(Elem& acc, const Elem& a, const Elem& b) const;

  // Rendered as a polynomial in z, e.g. "1/2*z^2 - z + 1".
  std::string to_string(const Elem& a) const;

  // The value as a rational if it lies in the prime field, else throws.
  Rational to_rational(const Elem& a) const;
  bool is_rational(const Elem& a) const;

private:
  void check(const Elem& a) const;
  Elem reduce(std::vector<Rational> raw) const;

  unsigned order_;
  unsigned phi_;
  std::vector<Rational> modulus_;
  std::vector<Elem> root_powers_;
};

} // namespace skewsmash
