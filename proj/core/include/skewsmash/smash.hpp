#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewsmash/finite_group.hpp"

namespace skewsmash {

// Element of a smash product, stored as a sparse combination of basis pairs
// (monomial, layer). For the group smash the layer indexes a group element
// g (basis r#g); for the dual smash it indexes an idempotent p_a.
template <class F>
class SmashElement {
public:
  using Elem = typename F::Elem;
  using Key = std::pair<Monomial, std::uint32_t>;
  using TermMap = std::map<Key, Elem>;

  SmashElement() = default;

  static SmashElement term(const F& field, Monomial m, std::uint32_t layer, Elem coeff) {
    SmashElement out;
    out.add_term(field, std::move(m), layer, std::move(coeff));
    return out;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const F& field, Monomial m, std::uint32_t layer, Elem coeff) {
    if (field.is_zero(coeff)) return;
    Key key{std::move(m), layer};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(coeff));
      return;
    }
    field.add_assign(it->second, coeff);
    if (field.is_zero(it->second)) terms_.erase(it);
  }

  void add(const F& field, const SmashElement& other) {
    for (const auto& [k, c] : other.terms_) add_term(field, k.first, k.second, c);
  }

  void scale(const F& field, const Elem& s) {
    if (field.is_zero(s)) {
      terms_.clear();
      return;
    }
    for (auto& [k, c] : terms_) c = field.mul(c, s);
  }

  bool equal(const F& field, const SmashElement& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      if (!field.equal(it->second, jt->second)) return false;
    }
    return true;
  }

  // Common degree of the monomial parts, or nullopt for 0 or mixed degrees.
  std::optional<unsigned> homogeneous_degree() const {
    std::optional<unsigned> deg;
    for (const auto& [k, c] : terms_) {
      unsigned d = monomial_degree(k.first);
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        return std::nullopt;
      }
    }
    return deg;
  }

private:
  TermMap terms_;
};

// R # kG: basis pairs m#g with (m#g)(m'#g') = m * g(m') # gg'.
template <class F>
class GroupSmashAlgebra {
public:
  using Elem = typename F::Elem;
  using Element = SmashElement<F>;

  GroupSmashAlgebra(SkewPolyRing<F> ring, FiniteGroup<F> group)
      : ring_(std::move(ring)), group_(std::move(group)) {}

  const SkewPolyRing<F>& ring() const { return ring_; }
  const FiniteGroup<F>& group() const { return group_; }
  const F& field() const { return ring_.field(); }
  std::size_t layer_count() const { return group_.size(); }

  unsigned long long dim_degree(unsigned d) const {
    return ring_.dim_degree(d) * layer_count();
  }

  Element multiply(const Element& a, const Element& b) const {
    const F& field = ring_.field();
    Element out;
    for (const auto& [ka, ca] : a.terms()) {
      for (const auto& [kb, cb] : b.terms()) {
        auto [gs, moved] = apply_automorphism(ring_, group_.element(ka.second), kb.first);
        auto [ms, prod] = ring_.mono_mul(ka.first, moved);
        std::uint32_t layer = static_cast<std::uint32_t>(group_.multiply(ka.second, kb.second));
        Elem coeff = field.mul(field.mul(ca, cb), field.mul(gs, ms));
        out.add_term(field, std::move(prod), layer, std::move(coeff));
      }
    }
    return out;
  }

  // Integral element scaled by the group order: sum of 1#g over all g.
  // Generates the same two-sided ideal as the idempotent e and has integer
  // coefficients, which keeps modular ranks sound.
  Element integral_scaled() const {
    Element out;
    Monomial one(ring_.var_count(), 0);
    for (std::size_t i = 0; i < group_.size(); ++i) {
      out.add_term(field(), one, static_cast<std::uint32_t>(i), field().one());
    }
    return out;
  }

  // The idempotent e itself; requires the group order to be invertible.
  Element integral_idempotent() const {
    const F& field = ring_.field();
    Elem order = field.from_int(static_cast<long>(group_.size()));
    if (field.is_zero(order)) {
      throw math_error("group order vanishes in the field; integral is not defined");
    }
    Element out = integral_scaled();
    out.scale(field, field.inv(order));
    return out;
  }

  std::string layer_name(std::uint32_t layer) const {
    return "g" + std::to_string(layer);
  }

private:
  SkewPolyRing<F> ring_;
  FiniteGroup<F> group_;
};

// Generator degrees for a grading by the cyclic group Z_m. Monomial degrees
// add up mod m, so every monomial relation is automatically homogeneous.
struct CyclicGrading {
  unsigned modulus;
  std::vector<unsigned> degrees;

  unsigned degree_of(const Monomial& m) const {
    if (m.size() != degrees.size()) throw config_error("grading arity mismatch");
    unsigned long long acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      acc += static_cast<unsigned long long>(degrees[i] % modulus) * m[i];
    }
    return static_cast<unsigned>(acc % modulus);
  }

  // Inner faithfulness of the dual action: the generator degrees must
  // generate the whole cyclic group.
  bool degrees_generate() const {
    unsigned g = modulus;
    for (unsigned d : degrees) g = std::gcd(g, d % modulus);
    return g == 1 || modulus == 1;
  }
};

// R # (kG)^o for G = Z_m acting through a grading: basis pairs m#p_a with
// (m#p_a)(m'#p_b) nonzero only when a = deg(m') + b, in which case it is
// (m m')#p_b.
template <class F>
class DualGroupSmashAlgebra {
public:
  using Elem = typename F::Elem;
  using Element = SmashElement<F>;

  DualGroupSmashAlgebra(SkewPolyRing<F> ring, CyclicGrading grading)
      : ring_(std::move(ring)), grading_(std::move(grading)) {
    if (grading_.modulus == 0) throw config_error("grading modulus must be positive");
    if (grading_.degrees.size() != ring_.var_count()) {
      throw config_error("grading must assign a degree to every generator");
    }
  }

  const SkewPolyRing<F>& ring() const { return ring_; }
  const CyclicGrading& grading() const { return grading_; }
  const F& field() const { return ring_.field(); }
  std::size_t layer_count() const { return grading_.modulus; }

  unsigned long long dim_degree(unsigned d) const {
    return ring_.dim_degree(d) * layer_count();
  }

  Element multiply(const Element& a, const Element& b) const {
    const F& field = ring_.field();
    unsigned m = grading_.modulus;
    Element out;
    for (const auto& [kb, cb] : b.terms()) {
      unsigned need = (grading_.degree_of(kb.first) + kb.second) % m;
      for (const auto& [ka, ca] : a.terms()) {
        if (ka.second != need) continue;
        auto [ms, prod] = ring_.mono_mul(ka.first, kb.first);
        out.add_term(field, std::move(prod), kb.second,
                     field.mul(field.mul(ca, cb), ms));
      }
    }
    return out;
  }

  // The integral of the dual group algebra is the idempotent at the
  // identity label; no scaling is needed.
  Element integral_scaled() const {
    return Element::term(field(), Monomial(ring_.var_count(), 0), 0, field().one());
  }

  Element integral_idempotent() const { return integral_scaled(); }

  std::string layer_name(std::uint32_t layer) const {
    return "p" + std::to_string(layer);
  }

private:
  SkewPolyRing<F> ring_;
  CyclicGrading grading_;
};

// Embeds r#1. For the group smash this is the single term at the identity
// layer; for the dual smash r#1 = sum over all idempotent layers.
template <class F>
SmashElement<F> embed_ring_element(const GroupSmashAlgebra<F>& alg,
                                   const AlgebraElement<F>& r) {
  SmashElement<F> out;
  for (const auto& [m, c] : r.terms()) out.add_term(alg.field(), m, 0, c);
  return out;
}

template <class F>
SmashElement<F> embed_ring_element(const DualGroupSmashAlgebra<F>& alg,
                                   const AlgebraElement<F>& r) {
  SmashElement<F> out;
  for (const auto& [m, c] : r.terms()) {
    for (std::uint32_t a = 0; a < alg.layer_count(); ++a) {
      out.add_term(alg.field(), m, a, c);
    }
  }
  return out;
}

template <class F, class Algebra>
std::string smash_to_string(const Algebra& alg, const SmashElement<F>& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << alg.field().to_string(c) << ")*";
    bool any = false;
    for (std::size_t i = 0; i < k.first.size(); ++i) {
      if (k.first[i] == 0) continue;
      any = true;
      os << "x" << (i + 1);
      if (k.first[i] > 1) os << "^" << k.first[i];
    }
    if (!any) os << "1";
    os << "#" << alg.layer_name(k.second);
  }
  return os.str();
}

} // namespace skewsmash
