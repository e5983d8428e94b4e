#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewsmash/errors.hpp"

namespace skewsmash {

// Dense row-major matrix over an exact field. Elimination always picks the
// leftmost nonzero column and the topmost unused row, so results are
// reproducible across runs and platforms.
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t i = row; i < rows_; ++i) {
        if (!field_.is_zero(at(i, col))) {
          sel = i;
          break;
        }
      }
      if (sel == rows_) continue;
      if (sel != row) swap_rows(sel, row);
      Elem inv = field_.inv(at(row, col));
      for (std::size_t j = col; j < cols_; ++j) {
        at(row, j) = field_.mul(at(row, j), inv);
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || field_.is_zero(at(i, col))) continue;
        Elem c = at(i, col);
        for (std::size_t j = col; j < cols_; ++j) {
          field_.submul(at(i, j), c, at(row, j));
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(at(a, j), at(b, j));
    }
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

template <class F>
std::size_t rref_rank(const F& field, const std::vector<std::vector<typename F::Elem>>& rows) {
  if (rows.empty()) return 0;
  Matrix<F> m(field, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw config_error("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m.rank();
}

// Solves A x = b exactly. Returns the solution with every free variable set
// to zero, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_linear(
    const F& field, const Matrix<F>& a, const std::vector<typename F::Elem>& b) {
  if (b.size() != a.rows()) throw config_error("right-hand side has wrong length");
  Matrix<F> aug(field, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename F::Elem> x(a.cols(), field.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = aug.at(k, a.cols());
  }
  return x;
}

} // namespace skewsmash
