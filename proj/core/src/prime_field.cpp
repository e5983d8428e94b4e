#include "skewsmash/prime_field.hpp"

#include <algorithm>
#include <random>

namespace skewsmash {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 acc = 1, b = base % m;
  while (e > 0) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < (1ull << 30) || p >= (1ull << 31)) {
    throw config_error("prime field modulus must lie in [2^30, 2^31), got " + std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    throw config_error(std::to_string(p) + " is not prime");
  }
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long long m = static_cast<long long>(p_);
  long long r = static_cast<long long>(v) % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), p_};
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
  return reduce_mod_p(r, p_);
}

PrimeField::Elem PrimeField::inv(const Elem& a) const {
  check(a);
  if (a.value == 0) throw math_error("division by zero in " + name());
  // Extended Euclid on signed 64-bit values.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a.value);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return {static_cast<std::uint64_t>(t), p_};
}

PrimeField::Elem PrimeField::pow_u(Elem base, std::uint64_t e) const {
  check(base);
  return {pow_mod(base.value, e, p_), p_};
}

std::uint64_t PrimeField::element_order(const Elem& a) const {
  check(a);
  if (a.value == 0) throw math_error("zero has no multiplicative order");
  std::uint64_t order = p_ - 1;
  std::uint64_t rem = order;
  for (std::uint64_t q = 2; q * q <= rem; ++q) {
    if (rem % q != 0) continue;
    while (rem % q == 0) rem /= q;
    while (order % q == 0 && pow_mod(a.value, order / q, p_) == 1) order /= q;
  }
  if (rem > 1) {
    while (order % rem == 0 && pow_mod(a.value, order / rem, p_) == 1) order /= rem;
  }
  return order;
}

PrimeField::Elem PrimeField::root_of_unity(std::uint64_t n) const {
  if (n == 0 || (p_ - 1) % n != 0) {
    throw math_error("gf(" + std::to_string(p_) + ") has no element of order " + std::to_string(n));
  }
  // Find a generator of the full multiplicative group, then power down.
  for (std::uint64_t g = 2; g < p_; ++g) {
    Elem cand{g, p_};
    if (element_order(cand) == p_ - 1) {
      return pow_u(cand, (p_ - 1) / n);
    }
  }
  throw math_error("no primitive root found");
}

PrimeFieldElement reduce_mod_p(const Rational& r, std::uint64_t p) {
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den_mod = den % pz;
  if (den_mod == 0) {
    throw math_error("denominator of " + rational_to_string(r) + " vanishes mod " + std::to_string(p));
  }
  mpz_class num_mod = num % pz;
  if (num_mod < 0) num_mod += pz;
  PrimeField f(p);
  PrimeFieldElement d{den_mod.get_ui(), p};
  PrimeFieldElement n{num_mod.get_ui(), p};
  return f.mul(n, f.inv(d));
}

std::vector<std::uint64_t> sample_certificate_primes(std::size_t count, std::uint64_t seed,
                                                     std::uint64_t residue_modulus,
                                                     std::uint64_t residue,
                                                     const std::vector<Rational>& must_be_unit) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 30, (1ull << 31) - 1);
  std::vector<std::uint64_t> primes;
  std::size_t attempts = 0;
  while (primes.size() < count) {
    if (++attempts > 2'000'000) throw math_error("certificate prime sampling failed");
    std::uint64_t cand = dist(rng);
    if (residue_modulus > 1) {
      cand -= (cand % residue_modulus);
      cand += residue;
      if (cand < (1ull << 30) || cand >= (1ull << 31)) continue;
    }
    if (!is_prime_u64(cand)) continue;
    if (std::find(primes.begin(), primes.end(), cand) != primes.end()) continue;
    bool ok = true;
    for (const auto& r : must_be_unit) {
      mpz_class v = r.get_num() * r.get_den();
      if (v % mpz_class(static_cast<unsigned long>(cand)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) primes.push_back(cand);
  }
  return primes;
}

} // namespace skewsmash
