#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "skewsmash/errors.hpp"

namespace skewsmash {

// Growing subspace of a fixed coordinate space. The basis is kept in reduced
// row echelon form with rows ordered by pivot column, so dimensions, spans
// and membership answers never depend on insertion order.
template <class F>
class RowSpace {
public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  RowSpace(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  // Eliminates every pivot coordinate from v in place.
  void reduce(Vec& v) const {
    check(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Elem& c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      Elem scale = c;
      axpy(v, scale, rows_[k], pivots_[k]);
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [&](const Elem& e) { return field_.is_zero(e); });
  }

  // Returns true when v enlarged the space.
  bool insert(Vec v) {
    if (is_full()) {
      check(v);
      return false;
    }
    reduce(v);
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!field_.is_zero(v[j])) {
        lead = j;
        break;
      }
    }
    if (lead == ambient_) return false;
    Elem inv = field_.inv(v[lead]);
    for (std::size_t j = lead; j < ambient_; ++j) v[j] = field_.mul(v[j], inv);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Elem& c = rows_[k][lead];
      if (field_.is_zero(c)) continue;
      Elem scale = c;
      axpy(rows_[k], scale, v, lead);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), static_cast<std::uint32_t>(lead));
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, static_cast<std::uint32_t>(lead));
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
  }

private:
  void check(const Vec& v) const {
    if (v.size() != ambient_) {
      throw config_error("vector length " + std::to_string(v.size()) +
                         " does not match ambient dimension " + std::to_string(ambient_));
    }
  }

  // target -= scale * source, where source[from] is the leading entry.
  void axpy(Vec& target, const Elem& scale, const Vec& source, std::size_t from) const {
    for (std::size_t j = from; j < ambient_; ++j) {
      if (field_.is_zero(source[j])) continue;
      field_.submul(target[j], scale, source[j]);
    }
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::uint32_t> pivots_;
};

// Sparse variant used by the degree ladders, where slices routinely have a
// few hundred thousand coordinates but small codimension. Rows stay in
// reduced echelon form; in that form a row can only be supported on its own
// pivot plus non-pivot columns, so storage is bounded by rank * (codim + 1).
template <class F>
class SparseRowSpace {
public:
  using Elem = typename F::Elem;
  struct Entry {
    std::uint32_t col;
    Elem value;
  };
  using Vec = std::vector<Entry>;

  SparseRowSpace(const F& field, std::size_t ambient)
      : field_(field), ambient_(ambient), pivot_row_(ambient, -1), col_rows_(ambient) {}

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return live_rows_; }
  bool is_full() const { return live_rows_ == ambient_; }

  // Basis rows in pivot order (for cross-checks and ladder transitions).
  std::vector<Vec> basis() const {
    std::vector<std::pair<std::uint32_t, const Vec*>> keyed;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r].empty()) keyed.emplace_back(rows_[r].front().col, &rows_[r]);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vec> out;
    out.reserve(keyed.size());
    for (auto& [piv, row] : keyed) out.push_back(*row);
    return out;
  }

  std::size_t total_entries() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  std::size_t max_row_entries() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n = std::max(n, r.size());
    return n;
  }

  void reduce(Vec& v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      std::uint32_t col = v[i].col;
      long r = pivot_row_[col];
      if (r < 0) {
        ++i;
        continue;
      }
      // Pivot entries are normalized to one, so the multiplier is v[i].value.
      v = subtract_scaled(v, v[i].value, rows_[static_cast<std::size_t>(r)], i);
    }
  }

  bool contains(Vec v) const {
    normalize_input(v);
    reduce(v);
    return v.empty();
  }

  // Adopts a row that provably keeps the basis reduced: entries sorted by
  // column, leading value one, no entry at any existing pivot column, and no
  // existing row supported on the new pivot column. The ladder seeding path
  // satisfies this by construction (it maps a reduced basis through an
  // order-preserving coordinate injection with unit scalars).
  void seed_row(Vec v) {
    if (v.empty()) throw math_error("seed row is empty");
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].col >= ambient_) throw math_error("seed row entry out of range");
      if (k > 0 && v[k - 1].col >= v[k].col) throw math_error("seed row not sorted");
      if (pivot_row_[v[k].col] >= 0) throw math_error("seed row meets an existing pivot");
      if (field_.is_zero(v[k].value)) throw math_error("seed row has a stored zero");
    }
    std::uint32_t lead = v.front().col;
    if (!field_.equal(v.front().value, field_.one())) {
      throw math_error("seed row pivot is not normalized");
    }
    for (std::uint32_t rid : col_rows_[lead]) {
      if (find_col(rows_[rid], lead) != rows_[rid].end()) {
        throw math_error("seed row column already supported");
      }
    }
    col_rows_[lead].clear();
    std::uint32_t rid = static_cast<std::uint32_t>(rows_.size());
    pivot_row_[lead] = static_cast<long>(rid);
    register_columns(v, rid, 1);
    rows_.push_back(std::move(v));
    ++live_rows_;
  }

  bool insert(Vec v) {
    normalize_input(v);
    reduce(v);
    if (v.empty()) return false;
    std::uint32_t lead = v.front().col;
    Elem inv = field_.inv(v.front().value);
    for (auto& e : v) e.value = field_.mul(e.value, inv);
    // Back-eliminate the new pivot from existing rows to stay reduced.
    std::vector<std::uint32_t> holders = col_rows_[lead];
    for (std::uint32_t rid : holders) {
      Vec& row = rows_[rid];
      auto it = find_col(row, lead);
      if (it == row.end()) continue; // stale registry entry
      row = subtract_scaled(row, it->value, v, static_cast<std::size_t>(it - row.begin()), rid);
    }
    col_rows_[lead].clear();
    std::uint32_t rid = static_cast<std::uint32_t>(rows_.size());
    pivot_row_[lead] = static_cast<long>(rid);
    register_columns(v, rid, 1);
    rows_.push_back(std::move(v));
    ++live_rows_;
    return true;
  }

private:
  void normalize_input(Vec& v) const {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    Vec merged;
    merged.reserve(v.size());
    for (auto& e : v) {
      if (e.col >= ambient_) throw config_error("sparse entry out of range");
      if (!merged.empty() && merged.back().col == e.col) {
        field_.add_assign(merged.back().value, e.value);
      } else {
        merged.push_back(std::move(e));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const Entry& e) { return field_.is_zero(e.value); }),
                 merged.end());
    v = std::move(merged);
  }

  typename Vec::iterator find_col(Vec& row, std::uint32_t col) const {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, std::uint32_t c) { return e.col < c; });
    if (it != row.end() && it->col == col) return it;
    return row.end();
  }

  // out = a - scale * b, skipping the cancelled position `cancel` of a.
  // When row_id >= 0 the result replaces a basis row and new column
  // memberships are registered.
  Vec subtract_scaled(const Vec& a, const Elem& scale, const Vec& b, std::size_t cancel,
                      long row_id = -1) const {
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        if (i != cancel) out.push_back(a[i]);
        ++i;
      } else if (i == a.size() || b[j].col < a[i].col) {
        Elem val = field_.neg(field_.mul(scale, b[j].value));
        if (!field_.is_zero(val)) {
          if (row_id >= 0) col_rows_[b[j].col].push_back(static_cast<std::uint32_t>(row_id));
          out.push_back(Entry{b[j].col, std::move(val)});
        }
        ++j;
      } else {
        if (i != cancel) {
          Elem val = a[i].value;
          field_.submul(val, scale, b[j].value);
          if (!field_.is_zero(val)) out.push_back(Entry{a[i].col, std::move(val)});
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  void register_columns(const Vec& v, std::uint32_t rid, std::size_t from) const {
    for (std::size_t k = from; k < v.size(); ++k) col_rows_[v[k].col].push_back(rid);
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<long> pivot_row_;
  // Per column, ids of basis rows that may hold a nonzero entry there.
  // Entries can be stale after eliminations; readers re-check the row.
  mutable std::vector<std::vector<std::uint32_t>> col_rows_;
  std::size_t live_rows_ = 0;
};

} // namespace skewsmash
