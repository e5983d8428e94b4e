#include <benchmark/benchmark.h>

#include <random>

#include "skewsmash/blocks.hpp"
#include "skewsmash/ladder.hpp"
#include "skewsmash/row_space.hpp"
#include "skewsmash/trace.hpp"

namespace {

using namespace skewsmash;

void bm_sparse_rowspace_insert(benchmark::State& state) {
  RationalField field;
  std::size_t ambient = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> col(0, static_cast<std::uint32_t>(ambient - 1));
  std::uniform_int_distribution<int> val(-4, 4);
  for (auto _ : state) {
    SparseRowSpace<RationalField> space(field, ambient);
    for (std::size_t r = 0; r < ambient / 2; ++r) {
      SparseRowSpace<RationalField>::Vec v;
      for (int k = 0; k < 6; ++k) {
        int c = val(rng);
        if (c != 0) v.push_back({col(rng), Rational(c)});
      }
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.col < b.col; });
      SparseRowSpace<RationalField>::Vec merged;
      for (auto& e : v) {
        if (!merged.empty() && merged.back().col == e.col) {
          merged.back().value += e.value;
        } else {
          merged.push_back(e);
        }
      }
      space.insert(std::move(merged));
      if (space.is_full()) break;
    }
    benchmark::DoNotOptimize(space.dimension());
  }
}
BENCHMARK(bm_sparse_rowspace_insert)->Arg(256)->Arg(1024);

void bm_ideal_ladder(benchmark::State& state) {
  RationalField field;
  unsigned n = static_cast<unsigned>(state.range(0));
  auto ring = SkewPolyRing<RationalField>::minus_one(field, n);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  for (auto _ : state) {
    GroupSmashAlgebra<RationalField> alg(ring, group);
    LadderOptions opts;
    opts.max_degree = 2 * n;
    opts.keep_slices = false;
    IdealLadder<RationalField, GroupSmashAlgebra<RationalField>> ladder(alg, opts);
    benchmark::DoNotOptimize(ladder.table().size());
  }
}
BENCHMARK(bm_ideal_ladder)->Arg(2)->Arg(3);

void bm_block_ladder(benchmark::State& state) {
  RationalField field;
  unsigned n = static_cast<unsigned>(state.range(0));
  auto ring = SkewPolyRing<RationalField>::minus_one(field, n);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  for (auto _ : state) {
    BlockLadderOptions opts;
    opts.max_degree = 2 * n;
    opts.keep_blocks = false;
    CyclicBlockLadder<RationalField> ladder(ring, group, field.from_int(-1), opts);
    benchmark::DoNotOptimize(ladder.table().size());
  }
}
BENCHMARK(bm_block_ladder)->Arg(2);

void bm_trace_series(benchmark::State& state) {
  RationalField field;
  unsigned n = static_cast<unsigned>(state.range(0));
  auto ring = SkewPolyRing<RationalField>::minus_one(field, n);
  auto group = FiniteGroup<RationalField>::cyclic_permutation(ring);
  for (auto _ : state) {
    auto s = trace_series(ring, group.element(1), 2 * (n + 2) + 3);
    benchmark::DoNotOptimize(s.coeffs.size());
  }
}
BENCHMARK(bm_trace_series)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
