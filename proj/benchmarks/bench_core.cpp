#include <benchmark/benchmark.h>

#include "tpbasis/bases.hpp"
#include "tpbasis/collocation.hpp"
#include "tpbasis/harness.hpp"
#include "tpbasis/random.hpp"
#include "tpbasis/spectral.hpp"
#include "tpbasis/tpcore.hpp"

namespace {

tpb::RatMatrix sample_matrix(int n, std::uint64_t seed) {
  tpb::SeededRng rng(seed);
  return tpb::random_stochastic_tp(n, rng, tpb::rat(19, 20));
}

void BM_Factorize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpb::RatMatrix m = sample_matrix(n, 42);
  for (auto _ : state) {
    auto f = tpb::factorize(m);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Factorize)->Arg(4)->Arg(6)->Arg(8);

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = tpb::factorize(sample_matrix(n, 42));
  for (auto _ : state) {
    auto m = tpb::compose(f);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(6)->Arg(8);

void BM_IsTp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpb::RatMatrix m = sample_matrix(n, 7);
  for (auto _ : state) {
    bool ok = tpb::is_tp(m);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_IsTp)->Arg(4)->Arg(6)->Arg(8);

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpb::RatMatrix m = sample_matrix(n, 11);
  tpb::PrecisionConfig cfg{100};
  for (auto _ : state) {
    auto ev = tpb::eigenvalues(m, cfg);
    benchmark::DoNotOptimize(ev);
  }
}
BENCHMARK(BM_Eigenvalues)->Arg(4)->Arg(6)->Arg(8);

void BM_SingularValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpb::RatMatrix m = sample_matrix(n, 11);
  tpb::PrecisionConfig cfg{100};
  for (auto _ : state) {
    auto sv = tpb::singular_values(m, cfg);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_SingularValues)->Arg(4)->Arg(6)->Arg(8);

void BM_BernsteinCollocation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto basis = tpb::BasisSystem::bernstein(n, tpb::rat(0, 1), tpb::rat(1, 1));
  auto nodes = tpb::uniform_interior_nodes(n);
  for (auto _ : state) {
    auto m = tpb::collocation_matrix(basis, nodes);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_BernsteinCollocation)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
