#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "skewsmash/errors.hpp"
#include "skewsmash/field.hpp"

namespace skewsmash {

// Exponent vector of a normally ordered monomial x_1^{a_1} ... x_n^{a_n}.
using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

// Number of degree-d monomials in v variables: C(d + v - 1, v - 1).
unsigned long long monomial_count(unsigned degree, unsigned vars);

// Binomial coefficient, exact in unsigned 64-bit range.
unsigned long long binomial(unsigned long long a, unsigned long long b);

// q-skew polynomial ring: x_a x_b = q(a, b) x_b x_a for a != b, with
// q(a, a) = 1 and q(a, b) q(b, a) = 1. Monomials x_1^{a_1} ... x_n^{a_n}
// form a basis; every word rewrites to one with an accumulated scalar.
//
// Degree-d monomials are ordered by descending lexicographic exponent
// vector, e.g. for n = 2, d = 2: x1^2, x1 x2, x2^2. All coordinate layouts
// in the library refer to this order.
template <class F>
class SkewPolyRing {
public:
  using Elem = typename F::Elem;

  enum class QKind { minus_one, commutative, general };

  static SkewPolyRing minus_one(const F& field, unsigned n) {
    return SkewPolyRing(field, n, QKind::minus_one, {});
  }
  static SkewPolyRing commutative(const F& field, unsigned n) {
    return SkewPolyRing(field, n, QKind::commutative, {});
  }
  // q listed for all ordered pairs; validated for the inverse symmetry.
  static SkewPolyRing with_parameters(const F& field, std::vector<std::vector<Elem>> q) {
    unsigned n = static_cast<unsigned>(q.size());
    return SkewPolyRing(field, n, QKind::general, std::move(q));
  }

  const F& field() const { return field_; }
  unsigned var_count() const { return n_; }
  QKind q_kind() const { return kind_; }

  // Scalar gamma with x_a x_b = gamma x_b x_a (0-indexed generators).
  Elem q(unsigned a, unsigned b) const {
    if (a >= n_ || b >= n_) throw config_error("generator index out of range");
    if (kind_ == QKind::minus_one) {
      return a == b ? field_.one() : field_.from_int(-1);
    }
    if (kind_ == QKind::commutative) return field_.one();
    return q_[a][b];
  }

  unsigned long long dim_degree(unsigned d) const { return monomial_count(d, n_); }

  // All monomials of degree d in ranking order.
  std::vector<Monomial> degree_basis(unsigned d) const {
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(dim_degree(d)));
    Monomial cur(n_, 0);
    enumerate(d, 0, cur, out);
    return out;
  }

  // Position of m within degree_basis(deg(m)).
  std::size_t monomial_rank(const Monomial& m) const {
    if (m.size() != n_) throw config_error("monomial has wrong variable count");
    unsigned long long rank = 0;
    unsigned remaining = monomial_degree(m);
    for (unsigned pos = 0; pos + 1 < n_; ++pos) {
      for (unsigned t = remaining; t > m[pos]; --t) {
        rank += monomial_count(remaining - t, n_ - pos - 1);
      }
      remaining -= m[pos];
    }
    return static_cast<std::size_t>(rank);
  }

  // Product of two normally ordered monomials: scalar and exponent sum.
  std::pair<Elem, Monomial> mono_mul(const Monomial& a, const Monomial& b) const {
    check_mono(a);
    check_mono(b);
    Elem scalar = field_.one();
    if (kind_ == QKind::minus_one) {
      unsigned long long swaps = 0;
      for (unsigned i = 0; i < n_; ++i) {
        if (b[i] == 0) continue;
        unsigned long long above = 0;
        for (unsigned k = i + 1; k < n_; ++k) above += a[k];
        swaps += above * b[i];
      }
      if (swaps & 1) scalar = field_.from_int(-1);
    } else if (kind_ == QKind::general) {
      for (unsigned i = 0; i < n_; ++i) {
        if (b[i] == 0) continue;
        for (unsigned k = i + 1; k < n_; ++k) {
          if (a[k] == 0) continue;
          scalar = field_.mul(scalar, field_pow(field_, q(k, i),
                                                static_cast<unsigned long>(a[k]) * b[i]));
        }
      }
    }
    Monomial sum(n_);
    for (unsigned i = 0; i < n_; ++i) sum[i] = a[i] + b[i];
    return {std::move(scalar), std::move(sum)};
  }

  // Scalar picked up by x_j * m (the letter passes everything below j).
  Elem left_gen_scalar(unsigned j, const Monomial& m) const {
    check_mono(m);
    if (kind_ == QKind::commutative) return field_.one();
    if (kind_ == QKind::minus_one) {
      unsigned long long swaps = 0;
      for (unsigned i = 0; i < j; ++i) swaps += m[i];
      return (swaps & 1) ? field_.from_int(-1) : field_.one();
    }
    Elem scalar = field_.one();
    for (unsigned i = 0; i < j; ++i) {
      if (m[i] == 0) continue;
      scalar = field_.mul(scalar, field_pow(field_, q(j, i), m[i]));
    }
    return scalar;
  }

  // Scalar picked up by m * x_j (the letter passes everything above j).
  Elem right_gen_scalar(unsigned j, const Monomial& m) const {
    check_mono(m);
    if (kind_ == QKind::commutative) return field_.one();
    if (kind_ == QKind::minus_one) {
      unsigned long long swaps = 0;
      for (unsigned k = j + 1; k < n_; ++k) swaps += m[k];
      return (swaps & 1) ? field_.from_int(-1) : field_.one();
    }
    Elem scalar = field_.one();
    for (unsigned k = j + 1; k < n_; ++k) {
      if (m[k] == 0) continue;
      scalar = field_.mul(scalar, field_pow(field_, q(k, j), m[k]));
    }
    return scalar;
  }

  void validate_q() const {
    if (kind_ != QKind::general) return;
    if (q_.size() != n_) throw config_error("q matrix must be n by n");
    for (unsigned a = 0; a < n_; ++a) {
      if (q_[a].size() != n_) throw config_error("q matrix must be n by n");
      if (!field_.equal(q_[a][a], field_.one())) {
        throw config_error("q(i, i) must be 1");
      }
      for (unsigned b = 0; b < n_; ++b) {
        if (field_.is_zero(q_[a][b])) throw config_error("q entries must be nonzero");
        if (!field_.equal(field_.mul(q_[a][b], q_[b][a]), field_.one())) {
          throw config_error("q(i, j) * q(j, i) must be 1");
        }
      }
    }
  }

private:
  SkewPolyRing(const F& field, unsigned n, QKind kind, std::vector<std::vector<Elem>> q)
      : field_(field), n_(n), kind_(kind), q_(std::move(q)) {
    if (n_ == 0) throw config_error("ring needs at least one generator");
    validate_q();
  }

  void check_mono(const Monomial& m) const {
    if (m.size() != n_) throw config_error("monomial has wrong variable count");
  }

  void enumerate(unsigned remaining, unsigned pos, Monomial& cur,
                 std::vector<Monomial>& out) const {
    if (pos + 1 == n_) {
      cur[pos] = remaining;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (unsigned t = remaining + 1; t-- > 0;) {
      cur[pos] = t;
      enumerate(remaining - t, pos + 1, cur, out);
    }
    cur[pos] = 0;
  }

  F field_;
  unsigned n_;
  QKind kind_;
  std::vector<std::vector<Elem>> q_;
};

// Graded dimensions of the ring itself: dim R_d = C(d + n - 1, n - 1).
std::vector<long long> ring_hilbert_dimensions(unsigned n, unsigned max_degree);

} // namespace skewsmash
