#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skewsmash/ring.hpp"

namespace skewsmash {

// Finite linear combination of normally ordered monomials. Zero-coefficient
// terms are never stored.
template <class F>
class AlgebraElement {
public:
  using Elem = typename F::Elem;
  using TermMap = std::map<Monomial, Elem>;

  AlgebraElement() = default;

  static AlgebraElement zero() { return AlgebraElement(); }

  static AlgebraElement monomial(const F& field, Monomial m, Elem coeff) {
    AlgebraElement out;
    out.add_term(field, std::move(m), std::move(coeff));
    return out;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const F& field, Monomial m, Elem coeff) {
    if (field.is_zero(coeff)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(coeff));
      return;
    }
    field.add_assign(it->second, coeff);
    if (field.is_zero(it->second)) terms_.erase(it);
  }

  void add(const F& field, const AlgebraElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(field, m, c);
  }

  void scale(const F& field, const Elem& s) {
    if (field.is_zero(s)) {
      terms_.clear();
      return;
    }
    for (auto& [m, c] : terms_) c = field.mul(c, s);
  }

  bool equal(const F& field, const AlgebraElement& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      if (!field.equal(it->second, jt->second)) return false;
    }
    return true;
  }

  std::string to_string(const F& field) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << field.to_string(c) << ")";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << "*x" << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

private:
  TermMap terms_;
};

template <class F>
AlgebraElement<F> element_multiply(const SkewPolyRing<F>& ring,
                                   const AlgebraElement<F>& a,
                                   const AlgebraElement<F>& b) {
  AlgebraElement<F> out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [scalar, sum] = ring.mono_mul(ma, mb);
      out.add_term(ring.field(), std::move(sum),
                   ring.field().mul(ring.field().mul(ca, cb), scalar));
    }
  }
  return out;
}

// Rewrites an arbitrary word in the generators (0-indexed letters, read left
// to right) into coefficient times a normally ordered monomial.
template <class F>
AlgebraElement<F> word_normal_form(const SkewPolyRing<F>& ring,
                                   const std::vector<unsigned>& word) {
  Monomial exps(ring.var_count(), 0);
  typename F::Elem coeff = ring.field().one();
  for (unsigned letter : word) {
    if (letter >= ring.var_count()) throw config_error("letter out of range in word");
    coeff = ring.field().mul(coeff, ring.right_gen_scalar(letter, exps));
    ++exps[letter];
  }
  return AlgebraElement<F>::monomial(ring.field(), std::move(exps), std::move(coeff));
}

} // namespace skewsmash
