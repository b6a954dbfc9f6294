#include <benchmark/benchmark.h>

#include "exsuper/euler.hpp"
#include "exsuper/verify.hpp"

namespace {

using namespace exsuper;

void BM_ChainF31(benchmark::State& state) {
  auto ctx = ScalarContext::finite(SuperType::F3_1, 7);
  Weight lambda{{3, 1, 4, 2}};
  for (auto _ : state)
    benchmark::DoNotOptimize(chain(lambda, SuperType::F3_1, ctx));
}
BENCHMARK(BM_ChainF31);

void BM_VerifyBoxG3(benchmark::State& state) {
  auto ctx = ScalarContext::finite(SuperType::G3, 5);
  std::vector<long long> box(3, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_box(SuperType::G3, ctx, box));
}
BENCHMARK(BM_VerifyBoxG3)->Arg(5)->Arg(10);

void BM_EulerCharG3(benchmark::State& state) {
  Weight lambda{{3, 1, 1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(euler_char(lambda, SuperType::G3));
}
BENCHMARK(BM_EulerCharG3);

void BM_EulerCharF31(benchmark::State& state) {
  Weight lambda{{1, 0, 1, 4}};
  for (auto _ : state)
    benchmark::DoNotOptimize(euler_char(lambda, SuperType::F3_1));
}
BENCHMARK(BM_EulerCharF31);

}  // namespace

BENCHMARK_MAIN();
