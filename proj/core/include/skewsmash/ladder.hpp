#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewsmash/row_space.hpp"
#include "skewsmash/smash.hpp"

namespace skewsmash {

struct DegreeRecord {
  unsigned degree;
  long long dim_total;
  long long dim_ideal;
  long long h;
};

struct LadderOptions {
  unsigned max_degree = 8;
  // One vanishing quotient dimension forces all later ones to vanish (the
  // quotient is generated in degrees 0 and 1), so the ladder can stop there.
  bool stop_on_zero = true;
  // Retain every degree slice for membership queries. Disable for long
  // pertinency runs where only the dimension table matters.
  bool keep_slices = true;
  std::size_t max_ambient = 2000000;
};

namespace detail {

inline std::uint64_t pack_monomial(const Monomial& m) {
  if (m.size() > 8) throw config_error("degree ladder supports at most 8 generators");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 255) throw config_error("degree ladder supports exponents up to 255");
    key = (key << 8) | m[i];
  }
  return key;
}

} // namespace detail

// Per-degree transition data: where multiplying a degree-(d-1) basis
// monomial by each generator lands inside the degree-d basis, and the
// commutation scalars the move picks up on each side.
template <class F>
struct RingStepTables {
  std::vector<Monomial> target;
  std::vector<std::vector<std::uint32_t>> rank_up;
  std::vector<std::vector<typename F::Elem>> left_scalar;
  std::vector<std::vector<typename F::Elem>> right_scalar;
};

template <class F>
RingStepTables<F> ring_step_tables(const SkewPolyRing<F>& ring, unsigned d,
                                   const std::vector<Monomial>& source, bool with_right) {
  if (d == 0) throw config_error("transition tables need a positive degree");
  unsigned n = ring.var_count();
  RingStepTables<F> t;
  t.target = ring.degree_basis(d);
  std::unordered_map<std::uint64_t, std::uint32_t> rank_of;
  rank_of.reserve(t.target.size() * 2);
  for (std::size_t r = 0; r < t.target.size(); ++r) {
    rank_of.emplace(detail::pack_monomial(t.target[r]), static_cast<std::uint32_t>(r));
  }
  t.rank_up.assign(n, std::vector<std::uint32_t>(source.size(), 0));
  t.left_scalar.assign(n, {});
  if (with_right) t.right_scalar.assign(n, {});
  for (unsigned j = 0; j < n; ++j) {
    t.left_scalar[j].reserve(source.size());
    if (with_right) t.right_scalar[j].reserve(source.size());
    for (std::size_t r = 0; r < source.size(); ++r) {
      Monomial up = source[r];
      ++up[j];
      t.rank_up[j][r] = rank_of.at(detail::pack_monomial(up));
      t.left_scalar[j].push_back(ring.left_gen_scalar(j, source[r]));
      if (with_right) t.right_scalar[j].push_back(ring.right_gen_scalar(j, source[r]));
    }
  }
  return t;
}

// Right multiplication of a basis pair by x_j # 1, decomposed into ring
// data: which generator enters the monomial, the landing layer, and the
// layer-level scalar (the ring-level commutation scalar is separate).
template <class F>
struct RightGenStep {
  unsigned gen;
  std::uint32_t layer;
  typename F::Elem scalar;
};

template <class F>
RightGenStep<F> right_gen_step(const GroupSmashAlgebra<F>& alg, unsigned j,
                               std::uint32_t layer) {
  const auto& g = alg.group().element(layer);
  return {g.perm[j], layer, g.scalars[j]};
}

template <class F>
RightGenStep<F> right_gen_step(const DualGroupSmashAlgebra<F>& alg, unsigned j,
                               std::uint32_t layer) {
  unsigned m = alg.grading().modulus;
  unsigned dj = alg.grading().degrees[j] % m;
  return {j, static_cast<std::uint32_t>((layer + m - dj) % m), alg.field().one()};
}

// Coordinate layout of a degree-d slice: column = monomial rank * layer
// count + layer, matching the descending-lex basis order.
template <class F, class Algebra>
typename SparseRowSpace<F>::Vec smash_coordinates(const Algebra& alg,
                                                  const SmashElement<F>& v,
                                                  unsigned degree) {
  typename SparseRowSpace<F>::Vec out;
  std::size_t gs = alg.layer_count();
  out.reserve(v.terms().size());
  for (const auto& [k, c] : v.terms()) {
    if (monomial_degree(k.first) != degree) {
      throw config_error("element is not homogeneous of the expected degree");
    }
    std::size_t r = alg.ring().monomial_rank(k.first);
    out.push_back({static_cast<std::uint32_t>(r * gs + k.second), c});
  }
  return out;
}

template <class F, class Algebra>
SmashElement<F> smash_from_coordinates(const Algebra& alg, unsigned degree,
                                       const typename SparseRowSpace<F>::Vec& vec) {
  auto basis = alg.ring().degree_basis(degree);
  std::size_t gs = alg.layer_count();
  SmashElement<F> out;
  for (const auto& e : vec) {
    std::size_t r = e.col / gs;
    out.add_term(alg.field(), basis[r], static_cast<std::uint32_t>(e.col % gs), e.value);
  }
  return out;
}

// Degree-by-degree basis of the two-sided ideal generated by the integral
// idempotent e (built from its integer-scaled multiple, which spans the
// same ideal). Degree 0 is the span of all degree-0 products b * e~ * b';
// every later slice is the sum of the left and right generator images of
// the previous one. That recursion is exact: the degree-0 slice is closed
// under both degree-0 multiplications, and the layer parts of the algebra
// slide past generator words.
template <class F, class Algebra>
class IdealLadder {
public:
  using Elem = typename F::Elem;
  using Space = SparseRowSpace<F>;
  using SparseVec = typename Space::Vec;

  IdealLadder(const Algebra& alg, LadderOptions opts)
      : alg_(alg), opts_(opts), field_(alg.field()) {
    build();
  }

  const std::vector<DegreeRecord>& table() const { return table_; }

  std::vector<long long> quotient_hilbert() const {
    std::vector<long long> h;
    h.reserve(table_.size());
    for (const auto& rec : table_) h.push_back(rec.h);
    return h;
  }

  bool certified_finite() const { return certified_; }

  // First degree with h = 0, meaningful only when certified.
  unsigned zero_degree() const {
    if (!certified_) throw math_error("no vanishing degree was found");
    return zero_degree_;
  }

  unsigned max_degree() const { return opts_.max_degree; }

  const Space& slice(unsigned d) const {
    if (!opts_.keep_slices) throw config_error("ladder was built without slices");
    if (d >= slices_.size()) throw config_error("degree exceeds the computed ladder");
    return slices_[d];
  }

  bool contains(const SmashElement<F>& v) const {
    if (v.is_zero()) return true;
    auto deg = v.homogeneous_degree();
    if (!deg) throw config_error("membership needs a homogeneous element");
    if (certified_ && *deg > zero_degree_) return true;
    if (!opts_.keep_slices) throw config_error("ladder was built without slices");
    if (*deg >= slices_.size()) throw config_error("degree exceeds the computed ladder");
    return slices_[*deg].contains(smash_coordinates(alg_, v, *deg));
  }

private:
  void build() {
    std::size_t gs = alg_.layer_count();
    unsigned n = alg_.ring().var_count();
    auto etilde = alg_.integral_scaled();
    Space s0(field_, gs);
    Monomial unit_mono(n, 0);
    for (std::uint32_t a = 0; a < gs && !s0.is_full(); ++a) {
      auto left = SmashElement<F>::term(field_, unit_mono, a, field_.one());
      auto mid = alg_.multiply(left, etilde);
      for (std::uint32_t b = 0; b < gs && !s0.is_full(); ++b) {
        auto right = SmashElement<F>::term(field_, unit_mono, b, field_.one());
        auto prod = alg_.multiply(mid, right);
        if (prod.is_zero()) continue;
        s0.insert(smash_coordinates(alg_, prod, 0));
      }
    }
    record(0, static_cast<long long>(gs), static_cast<long long>(s0.dimension()));

    std::vector<RightGenStep<F>> steps;
    steps.reserve(n * gs);
    for (unsigned j = 0; j < n; ++j) {
      for (std::uint32_t l = 0; l < gs; ++l) steps.push_back(right_gen_step(alg_, j, l));
    }

    std::vector<Monomial> source = alg_.ring().degree_basis(0);
    Space prev = std::move(s0);
    if (opts_.keep_slices) slices_.push_back(prev);

    for (unsigned d = 1; d <= opts_.max_degree; ++d) {
      if (certified_ && opts_.stop_on_zero) {
        record(d, static_cast<long long>(alg_.dim_degree(d)),
               static_cast<long long>(alg_.dim_degree(d)));
        continue;
      }
      unsigned long long ambient = alg_.dim_degree(d);
      if (ambient > opts_.max_ambient) {
        throw config_error("degree " + std::to_string(d) + " slice has dimension " +
                           std::to_string(ambient) + ", above the configured limit " +
                           std::to_string(opts_.max_ambient));
      }
      auto tables = ring_step_tables(alg_.ring(), d, source, true);
      Space cur(field_, static_cast<std::size_t>(ambient));
      auto basis_rows = prev.basis();
      for (const auto& row : basis_rows) {
        SparseVec seeded;
        seeded.reserve(row.size());
        for (const auto& e : row) {
          std::size_t r = e.col / gs;
          std::uint32_t l = static_cast<std::uint32_t>(e.col % gs);
          seeded.push_back({static_cast<std::uint32_t>(
                                static_cast<std::size_t>(tables.rank_up[0][r]) * gs + l),
                            e.value});
        }
        cur.seed_row(std::move(seeded));
      }
      for (const auto& row : basis_rows) {
        if (cur.is_full()) break;
        for (unsigned j = 1; j < n && !cur.is_full(); ++j) {
          SparseVec cand;
          cand.reserve(row.size());
          for (const auto& e : row) {
            std::size_t r = e.col / gs;
            std::uint32_t l = static_cast<std::uint32_t>(e.col % gs);
            Elem val = field_.mul(e.value, tables.left_scalar[j][r]);
            if (field_.is_zero(val)) continue;
            cand.push_back({static_cast<std::uint32_t>(
                                static_cast<std::size_t>(tables.rank_up[j][r]) * gs + l),
                            std::move(val)});
          }
          cur.insert(std::move(cand));
        }
        for (unsigned j = 0; j < n && !cur.is_full(); ++j) {
          SparseVec cand;
          cand.reserve(row.size());
          for (const auto& e : row) {
            std::size_t r = e.col / gs;
            std::uint32_t l = static_cast<std::uint32_t>(e.col % gs);
            const RightGenStep<F>& st = steps[j * gs + l];
            Elem val = field_.mul(e.value,
                                  field_.mul(tables.right_scalar[st.gen][r], st.scalar));
            if (field_.is_zero(val)) continue;
            cand.push_back({static_cast<std::uint32_t>(
                                static_cast<std::size_t>(tables.rank_up[st.gen][r]) * gs +
                                st.layer),
                            std::move(val)});
          }
          cur.insert(std::move(cand));
        }
      }
      record(d, static_cast<long long>(ambient), static_cast<long long>(cur.dimension()));
      source = std::move(tables.target);
      prev = std::move(cur);
      if (opts_.keep_slices) slices_.push_back(prev);
    }
  }

  void record(unsigned d, long long total, long long ideal) {
    long long h = total - ideal;
    table_.push_back({d, total, ideal, h});
    if (h == 0 && !certified_) {
      certified_ = true;
      zero_degree_ = d;
    }
  }

  Algebra alg_;
  LadderOptions opts_;
  F field_;
  std::vector<DegreeRecord> table_;
  std::vector<Space> slices_;
  bool certified_ = false;
  unsigned zero_degree_ = 0;
};

// Dimension of the corner e * B_d * e, which matches the degree-d dimension
// of the fixed subring.
template <class F, class Algebra>
std::size_t corner_dimension(const Algebra& alg, unsigned d) {
  auto e = alg.integral_idempotent();
  auto basis = alg.ring().degree_basis(d);
  std::size_t gs = alg.layer_count();
  SparseRowSpace<F> space(alg.field(), basis.size() * gs);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::uint32_t l = 0; l < gs; ++l) {
      auto b = SmashElement<F>::term(alg.field(), basis[r], l, alg.field().one());
      auto prod = alg.multiply(alg.multiply(e, b), e);
      if (prod.is_zero()) continue;
      space.insert(smash_coordinates(alg, prod, d));
      if (space.is_full()) return space.dimension();
    }
  }
  return space.dimension();
}

} // namespace skewsmash
