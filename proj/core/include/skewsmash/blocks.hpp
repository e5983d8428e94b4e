#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "skewsmash/ladder.hpp"

namespace skewsmash {

struct BlockLadderOptions {
  unsigned max_degree = 8;
  bool stop_on_zero = true;
  bool keep_blocks = true;
  std::size_t max_ambient = 2000000;
};

// Character-block form of the ideal ladder for a cyclic group W of order m
// acting by monomial automorphisms, over a field with a primitive m-th root
// of unity. The group algebra splits into character idempotents p_chi, the
// ideal (e) splits as the direct sum over chi of (R * R_{chi^{-1}}) # p_chi,
// and each summand is a plain subspace of R_d built by left multiplications
// plus fresh sigma-eigenvectors. This gives the same quotient dimensions as
// the full ladder at one m-th of the coordinate size per block.
template <class F>
class CyclicBlockLadder {
public:
  using Elem = typename F::Elem;
  using Space = SparseRowSpace<F>;
  using SparseVec = typename Space::Vec;

  CyclicBlockLadder(const SkewPolyRing<F>& ring, const FiniteGroup<F>& group,
                    Elem omega, BlockLadderOptions opts)
      : ring_(ring), group_(group), opts_(opts), field_(ring.field()),
        m_(static_cast<unsigned>(group.size())) {
    auto gen = group_.cyclic_generator();
    if (!gen) throw config_error("character blocks need a cyclic group");
    sigma_index_ = *gen;
    auto powers = group_.power_orbit(sigma_index_);
    if (powers.size() != m_) throw math_error("generator order does not match group size");
    power_of_element_.assign(m_, 0);
    for (unsigned k = 0; k < m_; ++k) {
      power_of_element_[powers[k]] = k;
    }
    omega_powers_.reserve(m_);
    omega_powers_.push_back(field_.one());
    for (unsigned k = 1; k < m_; ++k) {
      omega_powers_.push_back(field_.mul(omega_powers_.back(), omega));
      if (field_.equal(omega_powers_.back(), field_.one())) {
        throw config_error("omega is not a primitive root of unity of the group order");
      }
    }
    if (!field_.equal(field_.mul(omega_powers_.back(), omega), field_.one())) {
      throw config_error("omega is not a root of unity of the group order");
    }
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

  unsigned zero_degree() const {
    if (!certified_) throw math_error("no vanishing degree was found");
    return zero_degree_;
  }

  std::size_t block_dimension(unsigned d, unsigned c) const {
    return block_at(d, c).dimension();
  }

  // Membership of a homogeneous group-smash element: project onto each
  // character component and test the matching block.
  bool contains(const SmashElement<F>& v) const {
    if (v.is_zero()) return true;
    auto deg = v.homogeneous_degree();
    if (!deg) throw config_error("membership needs a homogeneous element");
    if (certified_ && *deg > zero_degree_) return true;
    if (!opts_.keep_blocks) throw config_error("ladder was built without blocks");
    if (*deg >= blocks_.size()) throw config_error("degree exceeds the computed ladder");
    for (unsigned c = 0; c < m_; ++c) {
      SparseVec phi;
      for (const auto& [k, coeff] : v.terms()) {
        unsigned kp = power_of_element_[k.second];
        Elem chi = omega_powers_[(static_cast<unsigned long long>(c) * kp) % m_];
        Elem val = field_.mul(coeff, chi);
        if (field_.is_zero(val)) continue;
        phi.push_back({static_cast<std::uint32_t>(ring_.monomial_rank(k.first)),
                       std::move(val)});
      }
      if (!blocks_[*deg][(m_ - c) % m_].contains(std::move(phi))) return false;
    }
    return true;
  }

private:
  const Space& block_at(unsigned d, unsigned c) const {
    if (!opts_.keep_blocks) throw config_error("ladder was built without blocks");
    if (d >= blocks_.size() || c >= m_) throw config_error("block index out of range");
    return blocks_[d][c];
  }

  void build() {
    const auto& sigma = group_.element(sigma_index_);
    std::vector<Space> prev;
    prev.reserve(m_);
    for (unsigned c = 0; c < m_; ++c) {
      Space s(field_, 1);
      if (c == 0) s.insert({{0, field_.one()}});
      prev.push_back(std::move(s));
    }
    record(0);
    long long ideal0 = 0;
    for (const auto& s : prev) ideal0 += static_cast<long long>(s.dimension());
    fix_last_record(static_cast<long long>(m_), ideal0);
    if (opts_.keep_blocks) blocks_.push_back(prev);

    std::vector<Monomial> source = ring_.degree_basis(0);
    for (unsigned d = 1; d <= opts_.max_degree; ++d) {
      if (certified_ && opts_.stop_on_zero) {
        long long total = static_cast<long long>(ring_.dim_degree(d)) * m_;
        record(d);
        fix_last_record(total, total);
        continue;
      }
      unsigned long long ambient = ring_.dim_degree(d);
      if (ambient > opts_.max_ambient) {
        throw config_error("degree " + std::to_string(d) + " block has dimension " +
                           std::to_string(ambient) + ", above the configured limit " +
                           std::to_string(opts_.max_ambient));
      }
      auto tables = ring_step_tables(ring_, d, source, false);
      std::unordered_map<std::uint64_t, std::uint32_t> rank_of;
      rank_of.reserve(tables.target.size() * 2);
      for (std::size_t r = 0; r < tables.target.size(); ++r) {
        rank_of.emplace(detail::pack_monomial(tables.target[r]),
                        static_cast<std::uint32_t>(r));
      }

      // Fresh eigenvectors: each sigma-orbit of degree-d monomials of length
      // l contributes one eigenvector for each of the l characters whose
      // value matches the orbit's return scalar.
      std::vector<std::vector<SparseVec>> fresh(m_);
      std::vector<bool> visited(tables.target.size(), false);
      for (std::size_t r0 = 0; r0 < tables.target.size(); ++r0) {
        if (visited[r0]) continue;
        std::vector<std::uint32_t> orbit_ranks;
        std::vector<Elem> orbit_scalars;
        Monomial cur = tables.target[r0];
        Elem acc = field_.one();
        std::uint32_t rank = static_cast<std::uint32_t>(r0);
        while (true) {
          visited[rank] = true;
          orbit_ranks.push_back(rank);
          orbit_scalars.push_back(acc);
          auto [s, next] = apply_automorphism(ring_, sigma, cur);
          acc = field_.mul(acc, s);
          rank = rank_of.at(detail::pack_monomial(next));
          cur = std::move(next);
          if (rank == static_cast<std::uint32_t>(r0)) break;
        }
        unsigned len = static_cast<unsigned>(orbit_ranks.size());
        unsigned t = m_;
        for (unsigned k = 0; k < m_; ++k) {
          if (field_.equal(omega_powers_[k], acc)) {
            t = k;
            break;
          }
        }
        if (t == m_ || t % len != 0 || m_ % len != 0) {
          throw math_error("orbit return scalar is not a compatible root of unity");
        }
        unsigned c0 = t / len;
        unsigned step = m_ / len;
        for (unsigned s = 0; s < len; ++s) {
          unsigned c = (c0 + s * step) % m_;
          SparseVec v;
          v.reserve(len);
          for (unsigned k = 0; k < len; ++k) {
            unsigned e = (static_cast<unsigned long long>(c) * k) % m_;
            Elem val = field_.mul(omega_powers_[(m_ - e) % m_], orbit_scalars[k]);
            v.push_back({orbit_ranks[k], std::move(val)});
          }
          fresh[c].push_back(std::move(v));
        }
      }

      std::vector<Space> curs;
      curs.reserve(m_);
      long long ideal = 0;
      for (unsigned c = 0; c < m_; ++c) {
        Space cur(field_, static_cast<std::size_t>(ambient));
        auto rows = prev[c].basis();
        for (const auto& row : rows) {
          SparseVec seeded;
          seeded.reserve(row.size());
          for (const auto& e : row) {
            seeded.push_back({tables.rank_up[0][e.col], e.value});
          }
          cur.seed_row(std::move(seeded));
        }
        for (const auto& row : rows) {
          if (cur.is_full()) break;
          for (unsigned j = 1; j < ring_.var_count() && !cur.is_full(); ++j) {
            SparseVec cand;
            cand.reserve(row.size());
            for (const auto& e : row) {
              Elem val = field_.mul(e.value, tables.left_scalar[j][e.col]);
              if (field_.is_zero(val)) continue;
              cand.push_back({tables.rank_up[j][e.col], std::move(val)});
            }
            cur.insert(std::move(cand));
          }
        }
        for (auto& v : fresh[c]) {
          if (cur.is_full()) break;
          cur.insert(std::move(v));
        }
        ideal += static_cast<long long>(cur.dimension());
        curs.push_back(std::move(cur));
      }
      record(d);
      fix_last_record(static_cast<long long>(ambient) * m_, ideal);
      source = std::move(tables.target);
      prev = std::move(curs);
      if (opts_.keep_blocks) blocks_.push_back(prev);
    }
  }

  void record(unsigned d) { table_.push_back({d, 0, 0, 0}); }

  void fix_last_record(long long total, long long ideal) {
    auto& rec = table_.back();
    rec.dim_total = total;
    rec.dim_ideal = ideal;
    rec.h = total - ideal;
    if (rec.h == 0 && !certified_) {
      certified_ = true;
      zero_degree_ = rec.degree;
    }
  }

  SkewPolyRing<F> ring_;
  FiniteGroup<F> group_;
  BlockLadderOptions opts_;
  F field_;
  unsigned m_;
  std::size_t sigma_index_ = 0;
  std::vector<unsigned> power_of_element_;
  std::vector<Elem> omega_powers_;
  std::vector<DegreeRecord> table_;
  std::vector<std::vector<Space>> blocks_;
  bool certified_ = false;
  unsigned zero_degree_ = 0;
};

} // namespace skewsmash
