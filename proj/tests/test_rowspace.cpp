#include "doctest.h"

#include <algorithm>
#include <random>

#include "skewsmash/field.hpp"
#include "skewsmash/matrix.hpp"
#include "skewsmash/row_space.hpp"

using namespace skewsmash;

namespace {

RationalField rat;

using Dense = RowSpace<RationalField>;
using Sparse = SparseRowSpace<RationalField>;

Sparse::Vec to_sparse(const std::vector<Rational>& dense) {
  Sparse::Vec v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return v;
}

std::vector<std::vector<Rational>> random_rows(std::size_t count, std::size_t ambient,
                                               unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::vector<Rational>> rows(count, std::vector<Rational>(ambient, Rational(0)));
  for (auto& row : rows) {
    for (auto& c : row) c = Rational(coeff(rng));
  }
  return rows;
}

} // namespace

TEST_SUITE("rowspace") {

TEST_CASE("dense and sparse spaces agree with the matrix rank") {
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    auto rows = random_rows(12, 9, seed);
    Dense dense(rat, 9);
    Sparse sparse(rat, 9);
    for (const auto& row : rows) {
      dense.insert(row);
      sparse.insert(to_sparse(row));
    }
    CHECK(dense.dimension() == sparse.dimension());
    CHECK(dense.dimension() == rref_rank(rat, rows));
  }
}

TEST_CASE("dimension is independent of insertion order") {
  auto rows = random_rows(10, 7, 99);
  Sparse forward(rat, 7);
  for (const auto& row : rows) forward.insert(to_sparse(row));
  Sparse backward(rat, 7);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) backward.insert(to_sparse(*it));
  CHECK(forward.dimension() == backward.dimension());
  for (const auto& row : rows) {
    CHECK(forward.contains(to_sparse(row)));
    CHECK(backward.contains(to_sparse(row)));
  }
}

TEST_CASE("membership distinguishes the span from its complement") {
  Sparse space(rat, 4);
  space.insert(to_sparse({1, 1, 0, 0}));
  space.insert(to_sparse({0, 0, 1, 1}));
  CHECK(space.dimension() == 2);
  CHECK(space.contains(to_sparse({2, 2, -1, -1})));
  CHECK_FALSE(space.contains(to_sparse({1, 0, 0, 0})));
  CHECK(space.contains(Sparse::Vec{}));
  CHECK_FALSE(space.insert(to_sparse({1, 1, 1, 1})));
  CHECK(space.dimension() == 2);
}

TEST_CASE("spaces fill up and reject further growth") {
  Sparse space(rat, 3);
  CHECK(space.insert(to_sparse({1, 0, 0})));
  CHECK(space.insert(to_sparse({1, 1, 0})));
  CHECK(space.insert(to_sparse({1, 1, 1})));
  CHECK(space.is_full());
  CHECK_FALSE(space.insert(to_sparse({2, -5, 7})));
}

TEST_CASE("the basis stays in reduced form") {
  Sparse space(rat, 5);
  space.insert(to_sparse({0, 2, 4, 0, 2}));
  space.insert(to_sparse({0, 1, 2, 1, 0}));
  space.insert(to_sparse({0, 0, 0, 3, 3}));
  auto basis = space.basis();
  REQUIRE(basis.size() == space.dimension());
  for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
    CHECK(basis[k].front().col < basis[k + 1].front().col);
  }
  for (const auto& row : basis) {
    CHECK(row.front().value == Rational(1));
    for (const auto& other : basis) {
      if (&other == &row) continue;
      auto it = std::find_if(other.begin(), other.end(),
                             [&](const auto& e) { return e.col == row.front().col; });
      CHECK(it == other.end());
    }
  }
}

TEST_CASE("seeding accepts only rows that keep the space reduced") {
  Sparse space(rat, 4);
  space.seed_row(to_sparse({1, 0, 0, 2}));
  CHECK(space.dimension() == 1);
  CHECK_THROWS_AS(space.seed_row(to_sparse({1, 1, 0, 0})), math_error);
  CHECK_THROWS_AS(space.seed_row(Sparse::Vec{}), math_error);
  CHECK_THROWS_AS(space.seed_row(to_sparse({0, 3, 0, 0})), math_error);
}

} // TEST_SUITE
