#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewsmash/errors.hpp"
#include "skewsmash/rational.hpp"

namespace skewsmash {

// Residue in GF(modulus). Certificate primes live in [2^30, 2^31), so all
// products fit in unsigned 64-bit arithmetic.
struct PrimeFieldElement {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  bool operator==(const PrimeFieldElement& other) const {
    return value == other.value && modulus == other.modulus;
  }
};

bool is_prime_u64(std::uint64_t n);

class PrimeField {
public:
  using Elem = PrimeFieldElement;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "gf(" + std::to_string(p_) + ")"; }

  Elem zero() const { return {0, p_}; }
  Elem one() const { return {1 % p_, p_}; }
  Elem from_int(long v) const;
  Elem from_rational(const Rational& r) const;

  bool is_zero(const Elem& a) const {
    check(a);
    return a.value == 0;
  }
  bool equal(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return a.value == b.value;
  }
  int cmp(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return a.value < b.value ? -1 : (a.value > b.value ? 1 : 0);
  }

  Elem add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    std::uint64_t s = a.value + b.value;
    if (s >= p_) s -= p_;
    return {s, p_};
  }
  Elem sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    std::uint64_t s = a.value + p_ - b.value;
    if (s >= p_) s -= p_;
    return {s, p_};
  }
  Elem neg(const Elem& a) const {
    check(a);
    return {a.value == 0 ? 0 : p_ - a.value, p_};
  }
  Elem mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return {mul_raw(a.value, b.value), p_};
  }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  void add_assign(Elem& acc, const Elem& a) const { acc = add(acc, a); }
  // acc -= a * b
  void submul(Elem& acc, const Elem& a, const Elem& b) const {
    acc = sub(acc, mul(a, b));
  }

  std::string to_string(const Elem& a) const { return std::to_string(a.value); }

  Elem pow_u(Elem base, std::uint64_t e) const;
  // Multiplicative order of a modulo p.
  std::uint64_t element_order(const Elem& a) const;
  // An element of exact multiplicative order n; requires n | p-1.
  Elem root_of_unity(std::uint64_t n) const;

private:
  void check(const Elem& a) const {
    if (a.modulus != p_) {
      throw config_error("prime field operand has modulus " + std::to_string(a.modulus) +
                         ", expected " + std::to_string(p_));
    }
  }
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }

  std::uint64_t p_;
};

// Image of a rational in GF(p); the denominator must be a unit mod p.
PrimeFieldElement reduce_mod_p(const Rational& r, std::uint64_t p);

// Deterministic sample of distinct certificate primes in [2^30, 2^31).
// Every returned prime p satisfies p ≡ residue (mod residue_modulus) when
// residue_modulus > 1, and leaves each entry of must_be_unit nonzero mod p.
std::vector<std::uint64_t> sample_certificate_primes(
    std::size_t count, std::uint64_t seed, std::uint64_t residue_modulus = 1,
    std::uint64_t residue = 0, const std::vector<Rational>& must_be_unit = {});

} // namespace skewsmash
