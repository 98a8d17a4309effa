#include <benchmark/benchmark.h>

#include "baryassoc/bassoc.hpp"
#include "baryassoc/family.hpp"
#include "baryassoc/oracle.hpp"
#include "baryassoc/text.hpp"

using namespace baryassoc;

namespace {

void BM_CheckMeanFamily(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const PolyFamily f = mz_family(parse_ring_literal("1/3", RingId::Rat), n, {});
  for (auto _ : state) benchmark::DoNotOptimize(check_b_associative(f));
}
BENCHMARK(BM_CheckMeanFamily)->DenseRange(3, 9, 2);

void BM_ClassifyGaussian(benchmark::State& state) {
  const RingValue z = parse_ring_literal("1/2-1/2i", RingId::GaussRat);
  const std::vector<RingValue> tail = {RingValue::one(RingId::GaussRat), RingValue::zero(RingId::GaussRat)};
  const PolyFamily f = mz_family(z, 5, tail);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyGaussian);

void BM_SubstituteDense(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Polynomial f = pow(parse_polynomial("x1 + 2*x2 - x3 + 1", RingId::Int, 3), n);
  const Assignment sigma = {{1, parse_polynomial("x1*x2 - 1", RingId::Int, 3)},
                            {2, parse_polynomial("x2 + x3", RingId::Int, 3)},
                            {3, parse_polynomial("x1 - x3^2", RingId::Int, 3)}};
  for (auto _ : state) benchmark::DoNotOptimize(substitute(f, sigma));
}
BENCHMARK(BM_SubstituteDense)->DenseRange(2, 6, 2);

void BM_SampleCheck(benchmark::State& state) {
  const PolyFamily f = mz_family(parse_ring_literal("2/5", RingId::Rat), 6, {});
  for (auto _ : state) benchmark::DoNotOptimize(sample_check(f, 100, 1));
}
BENCHMARK(BM_SampleCheck);

void BM_ExhaustiveSearch(benchmark::State& state) {
  SearchConfig cfg;
  cfg.ring = RingId::Int;
  cfg.max_arity = 3;
  cfg.max_total_degree = 1;
  for (long v = -2; v <= 2; ++v) cfg.coefficient_pool.push_back(RingValue::from_int(RingId::Int, v));
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(cfg, jobs));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
