#include "doctest.h"

#include <algorithm>
#include <random>

#include "skewsmash/blocks.hpp"
#include "skewsmash/ladder.hpp"
#include "skewsmash/trace.hpp"

using namespace skewsmash;

namespace {

RationalField rat;

using GroupAlg = GroupSmashAlgebra<RationalField>;
using Element = SmashElement<RationalField>;

GroupAlg skew_group_algebra(unsigned n) {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, n);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  return GroupAlg(ring, group);
}

template <class F>
std::vector<long long> ladder_h(const F& field, unsigned n, unsigned max_degree,
                                bool stop_on_zero = true) {
  auto ring = SkewPolyRing<F>::minus_one(field, n);
  auto group = FiniteGroup<F>::cyclic_permutation(ring);
  GroupSmashAlgebra<F> alg(ring, group);
  LadderOptions opts;
  opts.max_degree = max_degree;
  opts.stop_on_zero = stop_on_zero;
  opts.keep_slices = false;
  IdealLadder<F, GroupSmashAlgebra<F>> ladder(alg, opts);
  return ladder.quotient_hilbert();
}

} // namespace

TEST_SUITE("ladder") {

TEST_CASE("quotient table for two skew variables under the swap") {
  auto alg = skew_group_algebra(2);
  LadderOptions opts;
  opts.max_degree = 6;
  IdealLadder<RationalField, GroupAlg> ladder(alg, opts);
  const auto& table = ladder.table();
  REQUIRE(table.size() == 7);
  CHECK(table[0].dim_total == 2);
  CHECK(table[0].dim_ideal == 1);
  CHECK(table[1].dim_total == 4);
  CHECK(table[1].dim_ideal == 3);
  CHECK(ladder.quotient_hilbert() == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  CHECK(ladder.certified_finite());
  CHECK(ladder.zero_degree() == 2);
}

TEST_CASE("the vanished tail stays at zero without early stopping") {
  auto h = ladder_h(rat, 2, 8, false);
  for (std::size_t d = 2; d < h.size(); ++d) CHECK(h[d] == 0);
  auto h_stop = ladder_h(rat, 2, 8, true);
  CHECK(h == h_stop);
}

TEST_CASE("block and full ladders agree on the quotient dimensions") {
  for (unsigned n : {2u, 3u}) {
    auto ring = SkewPolyRing<RationalField>::minus_one(rat, n);
    auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
    GroupAlg alg(ring, group);
    LadderOptions fopts;
    fopts.max_degree = 2 * n + 2;
    fopts.keep_slices = false;
    IdealLadder<RationalField, GroupAlg> full(alg, fopts);

    PrimeField gf(1073741827);
    auto pring = SkewPolyRing<PrimeField>::minus_one(gf, n);
    auto pgroup = FiniteGroup<PrimeField>::cyclic_permutation(pring);
    BlockLadderOptions bopts;
    bopts.max_degree = 2 * n + 2;
    bopts.keep_blocks = false;
    CyclicBlockLadder<PrimeField> blocks(pring, pgroup, gf.root_of_unity(n), bopts);

    CHECK(full.quotient_hilbert() == blocks.quotient_hilbert());
  }
}

TEST_CASE("rational block ladder matches for the two element group") {
  auto ring = SkewPolyRing<RationalField>::minus_one(rat, 2);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  BlockLadderOptions opts;
  opts.max_degree = 6;
  CyclicBlockLadder<RationalField> blocks(ring, group, rat.from_int(-1), opts);
  CHECK(blocks.quotient_hilbert() == std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  CHECK(blocks.certified_finite());
  CHECK(blocks.zero_degree() == 2);
  CHECK(blocks.block_dimension(0, 0) + blocks.block_dimension(0, 1) == 1);
}

TEST_CASE("corner dimensions equal molien coefficients") {
  for (unsigned n : {2u, 3u}) {
    auto ring = SkewPolyRing<RationalField>::minus_one(rat, n);
    auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
    GroupAlg alg(ring, group);
    auto molien = molien_series(ring, group, 6);
    for (unsigned d = 0; d <= 6; ++d) {
      CHECK(Rational(static_cast<long>(corner_dimension<RationalField>(alg, d))) == molien.coeffs[d]);
      CHECK(corner_dimension<RationalField>(alg, d) == invariant_dimension_direct(ring, group, d));
    }
  }
}

TEST_CASE("ideal slices are stable under the degree zero bimodule action") {
  auto alg = skew_group_algebra(2);
  LadderOptions opts;
  opts.max_degree = 4;
  opts.stop_on_zero = false;
  IdealLadder<RationalField, GroupAlg> ladder(alg, opts);
  Monomial unit{0, 0};
  for (unsigned d = 0; d <= 4; ++d) {
    for (const auto& row : ladder.slice(d).basis()) {
      auto v = smash_from_coordinates<RationalField>(alg, d, row);
      for (std::uint32_t layer = 0; layer < alg.layer_count(); ++layer) {
        auto b0 = Element::term(rat, unit, layer, Rational(1));
        CHECK(ladder.contains(alg.multiply(b0, v)));
        CHECK(ladder.contains(alg.multiply(v, b0)));
      }
    }
  }
}

TEST_CASE("membership short circuits above the vanishing degree") {
  auto alg = skew_group_algebra(2);
  LadderOptions opts;
  opts.max_degree = 8;
  IdealLadder<RationalField, GroupAlg> ladder(alg, opts);
  REQUIRE(ladder.certified_finite());
  Monomial high{5, 2};
  CHECK(ladder.contains(Element::term(rat, high, 0, Rational(1))));
  CHECK(ladder.contains(Element()));

  Element mixed;
  mixed.add_term(rat, Monomial{1, 0}, 0, Rational(1));
  mixed.add_term(rat, Monomial{1, 1}, 0, Rational(1));
  CHECK_THROWS_AS(ladder.contains(mixed), config_error);
}

TEST_CASE("the degree zero slice does not contain the identity") {
  auto alg = skew_group_algebra(2);
  LadderOptions opts;
  opts.max_degree = 2;
  IdealLadder<RationalField, GroupAlg> ladder(alg, opts);
  Monomial unit{0, 0};
  auto one = Element::term(rat, unit, 0, Rational(1));
  CHECK_FALSE(ladder.contains(one));
  CHECK(ladder.contains(alg.integral_scaled()));
  CHECK(ladder.contains(alg.integral_idempotent()));
}

TEST_CASE("modular quotient dimensions never undercut the rational ones") {
  auto exact = ladder_h(rat, 3, 8, false);
  for (std::uint64_t p : sample_certificate_primes(3, 5, 3, 1)) {
    PrimeField gf(p);
    auto modular = ladder_h(gf, 3, 8, false);
    REQUIRE(modular.size() == exact.size());
    for (std::size_t d = 0; d < exact.size(); ++d) {
      CHECK(modular[d] >= exact[d]);
    }
    CHECK(modular == exact);
  }
}

TEST_CASE("quotient dimensions are stable under field extension") {
  auto h_rat = ladder_h(rat, 2, 6);
  CyclotomicField cyc(4);
  auto h_cyc = ladder_h(cyc, 2, 6);
  CHECK(h_rat == h_cyc);
}

TEST_CASE("the ambient size guard triggers on oversized runs") {
  auto alg = skew_group_algebra(3);
  LadderOptions opts;
  opts.max_degree = 12;
  opts.max_ambient = 50;
  CHECK_THROWS_AS((IdealLadder<RationalField, GroupAlg>(alg, opts)), config_error);
}

} // TEST_SUITE
