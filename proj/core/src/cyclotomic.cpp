#include "skewsmash/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "skewsmash/errors.hpp"
#include "skewsmash/field.hpp"
#include "skewsmash/polynomial.hpp"

namespace skewsmash {

namespace {

using Poly = std::vector<Rational>;

std::map<unsigned, Poly>& phi_cache() {
  static std::map<unsigned, Poly> cache;
  return cache;
}
std::mutex phi_mutex;

} // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw config_error("euler_phi(0) undefined");
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw config_error("cyclotomic_polynomial(0) undefined");
  RationalField q;
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto& cache = phi_cache();
  auto compute = [&cache, &q](auto&& self, unsigned m) -> const Poly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly p(m + 1, Rational(0)); // z^m - 1
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [quot, rem] = poly_divmod(q, p, self(self, d));
      if (poly_degree(q, rem) >= 0) throw math_error("cyclotomic division left a remainder");
      p = quot;
    }
    return cache.emplace(m, std::move(p)).first->second;
  };
  return compute(compute, n);
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  if (order == 0) throw config_error("cyclotomic order must be positive");
  phi_ = euler_phi(order);
  modulus_ = cyclotomic_polynomial(order);
  root_powers_.reserve(order);
  for (unsigned k = 0; k < order; ++k) {
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = 1;
    root_powers_.push_back(reduce(std::move(raw)));
  }
}

void CyclotomicField::check(const Elem& a) const {
  if (a.order != order_ || a.coeffs.size() != phi_) {
    throw config_error("cyclotomic operand from a different field (order " +
                       std::to_string(a.order) + " vs " + std::to_string(order_) + ")");
  }
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<Rational> raw) const {
  // The modulus is monic, so each top coefficient folds down exactly.
  for (size_t k = raw.size(); k-- > phi_;) {
    Rational c = raw[k];
    if (c == 0) continue;
    raw[k] = 0;
    for (unsigned j = 0; j < phi_; ++j) {
      raw[k - phi_ + j] -= c * modulus_[j];
    }
  }
  raw.resize(phi_, Rational(0));
  return Elem{order_, std::move(raw)};
}

CyclotomicField::Elem CyclotomicField::zero() const {
  return Elem{order_, std::vector<Rational>(phi_, Rational(0))};
}

CyclotomicField::Elem CyclotomicField::one() const { return from_int(1); }

CyclotomicField::Elem CyclotomicField::from_int(long v) const {
  return from_rational(Rational(v));
}

CyclotomicField::Elem CyclotomicField::from_rational(const Rational& r) const {
  std::vector<Rational> c(phi_, Rational(0));
  c[0] = r;
  return Elem{order_, std::move(c)};
}

CyclotomicField::Elem CyclotomicField::root_power(long k) const {
  long m = k % static_cast<long>(order_);
  if (m < 0) m += order_;
  return root_powers_[static_cast<size_t>(m)];
}

bool CyclotomicField::is_zero(const Elem& a) const {
  check(a);
  for (const auto& c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicField::equal(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  return a.coeffs == b.coeffs;
}

int CyclotomicField::cmp(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  for (unsigned i = 0; i < phi_; ++i) {
    int c = ::cmp(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c;
  }
  return 0;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  Elem out = a;
  for (unsigned i = 0; i < phi_; ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  Elem out = a;
  for (unsigned i = 0; i < phi_; ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  check(a);
  Elem out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  std::vector<Rational> raw(2 * phi_ - 1, Rational(0));
  for (unsigned i = 0; i < phi_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < phi_; ++j) {
      if (b.coeffs[j] == 0) continue;
      raw[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return reduce(std::move(raw));
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  check(a);
  if (is_zero(a)) throw math_error("division by zero in " + name());
  RationalField q;
  Poly ap(a.coeffs.begin(), a.coeffs.end());
  poly_trim(q, ap);
  auto egcd = poly_extended_gcd(q, ap, modulus_);
  if (poly_degree(q, egcd.g) != 0) throw math_error("noninvertible cyclotomic element");
  return reduce(std::move(egcd.u));
}

CyclotomicField::Elem CyclotomicField::div(const Elem& a, const Elem& b) const {
  return mul(a, inv(b));
}

void CyclotomicField::add_assign(Elem& acc, const Elem& a) const {
  check(acc);
  check(a);
  for (unsigned i = 0; i < phi_; ++i) acc.coeffs[i] += a.coeffs[i];
}

void CyclotomicField::submul(Elem& acc, const Elem& a, const Elem& b) const {
  Elem prod = mul(a, b);
  check(acc);
  for (unsigned i = 0; i < phi_; ++i) acc.coeffs[i] -= prod.coeffs[i];
}

std::string CyclotomicField::to_string(const Elem& a) const {
  check(a);
  std::ostringstream out;
  bool first = true;
  for (size_t i = phi_; i-- > 0;) {
    const Rational& c = a.coeffs[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = abs_c == 1;
    if (i == 0 || !unit) out << rational_to_string(abs_c);
    if (i > 0) {
      if (!unit) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

bool CyclotomicField::is_rational(const Elem& a) const {
  check(a);
  for (unsigned i = 1; i < phi_; ++i) {
    if (a.coeffs[i] != 0) return false;
  }
  return true;
}

Rational CyclotomicField::to_rational(const Elem& a) const {
  if (!is_rational(a)) {
    throw math_error("cyclotomic value " + to_string(a) + " is not rational");
  }
  return a.coeffs[0];
}

} // namespace skewsmash
