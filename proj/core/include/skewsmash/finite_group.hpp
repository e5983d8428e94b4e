#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "skewsmash/automorphism.hpp"

namespace skewsmash {

// Finite group of monomial automorphisms, closed under composition. Element
// 0 is the identity. Built from generators by breadth-first closure with a
// hard size cap so a non-closing generating set fails fast.
template <class F>
class FiniteGroup {
public:
  using Elem = typename F::Elem;
  using Auto = MonomialAutomorphism<F>;

  static constexpr std::size_t default_size_cap = 100000;

  FiniteGroup(const SkewPolyRing<F>& ring, const std::vector<Auto>& generators,
              std::size_t size_cap = default_size_cap)
      : field_(ring.field()), n_(ring.var_count()) {
    for (const auto& g : generators) {
      if (!preserves_relations(ring, g)) {
        throw config_error("generator is not an automorphism of the ring: "
                           "it breaks a commutation relation");
      }
    }
    build(generators, size_cap);
  }

  // Cyclic group generated by x_i -> x_{i+1} (indices mod n).
  static FiniteGroup cyclic_permutation(const SkewPolyRing<F>& ring) {
    unsigned n = ring.var_count();
    Auto sigma;
    sigma.perm.resize(n);
    sigma.scalars.assign(n, ring.field().one());
    for (unsigned i = 0; i < n; ++i) sigma.perm[i] = (i + 1) % n;
    return FiniteGroup(ring, {sigma});
  }

  const F& field() const { return field_; }
  std::size_t size() const { return elements_.size(); }
  const Auto& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Auto>& elements() const { return elements_; }

  std::size_t multiply(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

  std::optional<std::size_t> find(const Auto& g) const {
    auto it = index_.find(key_of(g));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t element_order(std::size_t i) const {
    std::size_t cur = i;
    std::size_t order = 1;
    while (cur != 0) {
      cur = table_[cur][i];
      ++order;
    }
    return order;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (table_[i][j] != table_[j][i]) return false;
      }
    }
    return true;
  }

  // Index of an element whose powers enumerate the whole group, if any.
  std::optional<std::size_t> cyclic_generator() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (element_order(i) == size()) return i;
    }
    return std::nullopt;
  }

  // Powers of the element: out[k] = index of its k-th power, length = order.
  std::vector<std::size_t> power_orbit(std::size_t i) const {
    std::vector<std::size_t> powers{0};
    std::size_t acc = i;
    while (acc != 0) {
      powers.push_back(acc);
      acc = table_[acc][i];
    }
    return powers;
  }

private:
  // Canonical comparable key: permutation images then scalar strings.
  using Key = std::pair<std::vector<unsigned>, std::vector<std::string>>;

  Key key_of(const Auto& g) const {
    std::vector<std::string> sc;
    sc.reserve(g.scalars.size());
    for (const auto& s : g.scalars) sc.push_back(field_.to_string(s));
    return {g.perm, sc};
  }

  void build(const std::vector<Auto>& generators, std::size_t size_cap) {
    Auto id = identity_automorphism<F>(field_, n_);
    elements_.push_back(id);
    index_.emplace(key_of(id), 0);
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::size_t cur = frontier.front();
      frontier.pop_front();
      for (const auto& g : generators) {
        Auto next = compose(field_, g, elements_[cur]);
        Key key = key_of(next);
        if (index_.count(key)) continue;
        if (elements_.size() >= size_cap) {
          throw config_error("group closure exceeded the size cap");
        }
        index_.emplace(std::move(key), elements_.size());
        frontier.push_back(elements_.size());
        elements_.push_back(std::move(next));
      }
    }
    table_.assign(size(), std::vector<std::uint32_t>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        Auto prod = compose(field_, elements_[i], elements_[j]);
        auto it = index_.find(key_of(prod));
        if (it == index_.end()) throw math_error("group closure is not closed");
        table_[i][j] = static_cast<std::uint32_t>(it->second);
      }
    }
    inverse_.assign(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < size(); ++j) {
        if (table_[i][j] == 0) {
          inverse_[i] = j;
          found = true;
          break;
        }
      }
      if (!found) throw math_error("group element has no inverse");
    }
  }

  F field_;
  unsigned n_;
  std::vector<Auto> elements_;
  std::map<Key, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::size_t> inverse_;
};

} // namespace skewsmash
