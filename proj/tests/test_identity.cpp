#include "doctest.h"

#include "skewsmash/automorphism.hpp"
#include "skewsmash/identity_suite.hpp"
#include "skewsmash/ring.hpp"

using namespace skewsmash;

TEST_SUITE("identity") {

TEST_CASE("eigenbasis vectors diagonalize the rotation") {
  CyclotomicField field(4);
  auto ring = SkewPolyRing<CyclotomicField>::minus_one(field, 4);
  auto ys = skew_eigen_basis(field, 4);
  REQUIRE(ys.size() == 4);
  MonomialAutomorphism<CyclotomicField> sigma;
  sigma.perm = {1, 2, 3, 0};
  sigma.scalars.assign(4, field.one());
  for (unsigned j = 0; j < 4; ++j) {
    auto moved = apply_automorphism(ring, sigma, ys[j]);
    auto expect = ys[j];
    expect.scale(field, field.root_power(-static_cast<long>(j)));
    CHECK(moved.equal(field, expect));
  }
}

TEST_CASE("anticommutators collapse to the squared sums") {
  CyclotomicField field(4);
  auto ring = SkewPolyRing<CyclotomicField>::minus_one(field, 4);
  auto ys = skew_eigen_basis(field, 4);
  auto squares = skew_central_squares(field, 4);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      auto lhs = element_multiply(ring, ys[i], ys[j]);
      lhs.add(field, element_multiply(ring, ys[j], ys[i]));
      auto rhs = squares[(i + j) % 4];
      rhs.scale(field, field.from_int(2));
      CHECK(lhs.equal(field, rhs));
    }
  }
}

TEST_CASE("suite results for four variables") {
  CyclotomicField field(4);
  auto r = run_identity_suite(field, 4);
  CHECK(r.n == 4);
  CHECK(r.cyclotomic_order == 4);
  CHECK(r.pair_count == 16);
  CHECK(r.anticommutators_hold);
  CHECK(r.membership_applicable);
  CHECK(r.y_power_exponent == 6);
  CHECK(r.y_powers_in_ideal);
  CHECK(r.pair_power_exponent == 4);
  CHECK(r.pair_powers_in_ideal);
}

TEST_CASE("suite results for two variables") {
  CyclotomicField field(2);
  auto r = run_identity_suite(field, 2);
  CHECK(r.pair_count == 4);
  CHECK(r.anticommutators_hold);
  CHECK(r.membership_applicable);
  CHECK(r.y_power_exponent == 4);
  CHECK(r.y_powers_in_ideal);
  CHECK(r.pair_power_exponent == 2);
  CHECK(r.pair_powers_in_ideal);
}

TEST_CASE("membership checks are skipped away from powers of two") {
  CyclotomicField field(3);
  auto r = run_identity_suite(field, 3);
  CHECK(r.anticommutators_hold);
  CHECK_FALSE(r.membership_applicable);
  REQUIRE_FALSE(r.notes.empty());

  CyclotomicField field6(6);
  auto r6 = run_identity_suite(field6, 6);
  CHECK(r6.anticommutators_hold);
  CHECK_FALSE(r6.membership_applicable);
}

TEST_CASE("the suite needs a root of the right order") {
  CyclotomicField field(4);
  CHECK_THROWS_AS(run_identity_suite(field, 3), config_error);
}

TEST_CASE("a larger field containing the root also works") {
  CyclotomicField field(8);
  auto r = run_identity_suite(field, 4);
  CHECK(r.anticommutators_hold);
  CHECK(r.y_powers_in_ideal);
  CHECK(r.pair_powers_in_ideal);
}

} // TEST_SUITE
