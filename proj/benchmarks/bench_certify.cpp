#include <benchmark/benchmark.h>

#include "slopecert/certify.hpp"

using namespace slopecert;

static void BM_CertifyBundle(benchmark::State& state) {
  const ptbundle::Monodromy m(exactlin::Mat2{2, 1, 1, 1});
  for (auto _ : state) {
    auto cert = certify::certify_ptb(m);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyBundle);

static void BM_CertifyTwoBridge(benchmark::State& state) {
  const twobridge::TwoBridgePair k(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(0)) - 2);
  for (auto _ : state) {
    auto cert = certify::certify_twobridge(k);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyTwoBridge)->Arg(5)->Arg(9)->Arg(13);

static void BM_NineFoldSubgroupPresentation(benchmark::State& state) {
  const ptbundle::Monodromy m(exactlin::Mat2{3, 1, 2, 1});
  const auto f = ptbundle::normalize_commutator(
      ptbundle::lift_to_automorphism(ptbundle::factor_sl2z(m)));
  const auto bp = ptbundle::bundle_presentation(f);
  const auto table = ptbundle::nine_fold_cover(bp, m);
  for (auto _ : state) {
    auto sub = fpgroup::subgroup_presentation(bp.pres, table);
    benchmark::DoNotOptimize(sub);
  }
}
BENCHMARK(BM_NineFoldSubgroupPresentation);

BENCHMARK_MAIN();
