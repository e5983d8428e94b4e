#include "doctest.h"

#include "skewsmash/automorphism.hpp"
#include "skewsmash/element.hpp"
#include "skewsmash/finite_group.hpp"
#include "skewsmash/ring.hpp"

using namespace skewsmash;

namespace {

RationalField rat;

Monomial mono(std::initializer_list<unsigned> exps) { return Monomial(exps); }

} // namespace

TEST_SUITE("ring") {

TEST_CASE("sign convention of the skew product") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  auto [s1, m1] = ring.mono_mul(mono({0, 1}), mono({1, 0}));
  CHECK(s1 == Rational(-1));
  CHECK(m1 == mono({1, 1}));
  auto [s2, m2] = ring.mono_mul(mono({1, 0}), mono({0, 1}));
  CHECK(s2 == Rational(1));
  auto [s3, m3] = ring.mono_mul(mono({0, 2}), mono({1, 0}));
  CHECK(s3 == Rational(1));
  auto [s4, m4] = ring.mono_mul(mono({1, 1}), mono({1, 1}));
  CHECK(s4 == Rational(-1));
  CHECK(m4 == mono({2, 2}));
}

TEST_CASE("general parameters respect the inverse symmetry") {
  std::vector<std::vector<Rational>> q{{1, 2}, {Rational(1) / 2, 1}};
  auto ring = SkewPolyRing<RationalField>::with_parameters(rat, q);
  auto [s, m] = ring.mono_mul(mono({0, 1}), mono({1, 0}));
  CHECK(s == Rational(1) / 2);
  std::vector<std::vector<Rational>> bad{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(SkewPolyRing<RationalField>::with_parameters(rat, bad), config_error);
}

TEST_CASE("monomial ranking matches the degree basis") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 3);
  for (unsigned d = 0; d <= 4; ++d) {
    auto basis = ring.degree_basis(d);
    CHECK(basis.size() == ring.dim_degree(d));
    for (std::size_t r = 0; r < basis.size(); ++r) {
      CHECK(ring.monomial_rank(basis[r]) == r);
    }
  }
  auto b2 = ring.degree_basis(2);
  CHECK(b2.front() == mono({2, 0, 0}));
  CHECK(b2.back() == mono({0, 0, 2}));
}

TEST_CASE("words normalize with the accumulated scalar") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  auto w = word_normal_form(ring, {1, 0});
  REQUIRE(w.terms().size() == 1);
  const auto& [m, c] = *w.terms().begin();
  CHECK(m == mono({1, 1}));
  CHECK(c == Rational(-1));

  auto ww = word_normal_form(ring, {1, 0, 1, 0});
  const auto& [m2, c2] = *ww.terms().begin();
  CHECK(m2 == mono({2, 2}));
  CHECK(c2 == Rational(-1));
}

TEST_CASE("element arithmetic cancels exactly") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  auto a = AlgebraElement<RationalField>::monomial(rat, mono({1, 0}), Rational(1));
  auto b = AlgebraElement<RationalField>::monomial(rat, mono({0, 1}), Rational(1));
  auto ab = element_multiply(ring, a, b);
  auto ba = element_multiply(ring, b, a);
  auto sum = ab;
  sum.add(rat, ba);
  CHECK(sum.is_zero());
}

TEST_CASE("automorphism application tracks reordering signs") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  MonomialAutomorphism<RationalField> swap;
  swap.perm = {1, 0};
  swap.scalars = {Rational(1), Rational(1)};
  CHECK(preserves_relations(ring, swap));

  auto [s, target] = apply_automorphism(ring, swap, mono({1, 1}));
  CHECK(target == mono({1, 1}));
  CHECK(s == Rational(-1));

  auto [s2, t2] = apply_automorphism(ring, swap, mono({2, 1}));
  CHECK(t2 == mono({1, 2}));
  CHECK(s2 == Rational(1));
}

TEST_CASE("automorphisms compose and invert") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 3);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  const auto& sigma = group.element(1);
  auto sigma2 = compose(rat, sigma, sigma);
  auto sigma3 = compose(rat, sigma2, sigma);
  CHECK(automorphism_is_identity(rat, sigma3));
  auto inv = inverse(rat, sigma);
  CHECK(automorphism_equal(rat, inv, sigma2));
}

TEST_CASE("cyclic permutation groups close at order n") {
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    auto ring = SkewPolyRing<RationalField>::minus_one(rat, n);
    auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
    CHECK(group.size() == n);
    CHECK(group.is_abelian());
    auto gen = group.cyclic_generator();
    REQUIRE(gen.has_value());
    CHECK(group.element_order(*gen) == n);
    CHECK(group.power_orbit(*gen).size() == n);
    CHECK(group.multiply(group.inverse_index(1), 1) == 0);
  }
}

TEST_CASE("explicit scalar generators close to the expected group") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  MonomialAutomorphism<RationalField> diag;
  diag.perm = {0, 1};
  diag.scalars = {Rational(-1), Rational(-1)};
  FiniteGroup<RationalField> group(ring, {diag});
  CHECK(group.size() == 2);
  CHECK(group.element_order(1) == 2);
  CHECK(group.find(diag).has_value());

  MonomialAutomorphism<RationalField> stretch;
  stretch.perm = {0, 1};
  stretch.scalars = {Rational(2), Rational(1)};
  CHECK_THROWS_AS(FiniteGroup<RationalField>(ring, {stretch}, 50), config_error);
}

TEST_CASE("generators that break the relations are rejected") {
  std::vector<std::vector<Rational>> q{{1, 2}, {Rational(1) / 2, 1}};
  auto ring = SkewPolyRing<RationalField>::with_parameters(rat, q);
  MonomialAutomorphism<RationalField> swap;
  swap.perm = {1, 0};
  swap.scalars = {Rational(1), Rational(1)};
  CHECK_FALSE(preserves_relations(ring, swap));
  CHECK_THROWS_AS(FiniteGroup<RationalField>(ring, {swap}), config_error);
}

} // TEST_SUITE
