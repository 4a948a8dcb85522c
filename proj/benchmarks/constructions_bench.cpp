#include <benchmark/benchmark.h>

#include "isoset/constructions.hpp"
#include "isoset/intersection.hpp"
#include "isoset/verify.hpp"

namespace {

using namespace isoset;

void BM_IsolationConstruct(benchmark::State& state) {
  const auto t = static_cast<Element>(state.range(0));
  const Element k = 4 * t + 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isolation_construct(k, t));
  }
}
BENCHMARK(BM_IsolationConstruct)->RangeMultiplier(2)->Range(2, 64);

void BM_VerifyIsolation(benchmark::State& state) {
  const auto t = static_cast<Element>(state.range(0));
  const FamilyPair fp = isolation_construct(4 * t + 10, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_isolation(fp).ok());
  }
}
BENCHMARK(BM_VerifyIsolation)->RangeMultiplier(2)->Range(2, 64);

void BM_TriangularConstruct(benchmark::State& state) {
  const auto a = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangular_construct(a, a));
  }
}
BENCHMARK(BM_TriangularConstruct)->DenseRange(2, 5);

void BM_BuildA(benchmark::State& state) {
  const auto k = static_cast<Element>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_A(k, k / 2));
  }
}
BENCHMARK(BM_BuildA)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
