#include <benchmark/benchmark.h>

#include "effectus/api.hpp"
#include "effectus/generators.hpp"
#include "effectus/herm.hpp"
#include "effectus/suites.hpp"

using namespace effectus;

namespace {

void BM_HermEig(benchmark::State& state) {
  Rng rng(1);
  int n = static_cast<int>(state.range(0));
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.at(r, c) = cplx(rng.gaussian(), rng.gaussian());
  CMatrix h = (g + g.adjoint()) * 0.5;
  for (auto _ : state) {
    EigenSystem es = hermEig(h);
    benchmark::DoNotOptimize(es.values.data());
  }
}
BENCHMARK(BM_HermEig)->Arg(4)->Arg(8)->Arg(16);

void BM_PsdSqrt(benchmark::State& state) {
  Rng rng(2);
  CMatrix e = gen::randomEffectMatrix(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CMatrix r = psdSqrt(e);
    benchmark::DoNotOptimize(r.data().data());
  }
}
BENCHMARK(BM_PsdSqrt)->Arg(4)->Arg(8);

void BM_KernelCompose(benchmark::State& state) {
  Rng rng(3);
  FinSet x{static_cast<int>(state.range(0)), {}};
  KernelMap f = gen::kernel(rng, x, x);
  KernelMap g = gen::kernel(rng, x, x);
  for (auto _ : state) {
    KernelMap h = ProbEff::compose(g, f);
    benchmark::DoNotOptimize(h.rows.data());
  }
}
BENCHMARK(BM_KernelCompose)->Arg(3)->Arg(5);

void BM_KrausHeisenberg(benchmark::State& state) {
  Rng rng(4);
  VnAlg x{{static_cast<int>(state.range(0))}};
  KrausMap f = gen::krausTotal(rng, x, x);
  BlockEffect y = gen::blockEffect(rng, x);
  for (auto _ : state) {
    BlockEffect out = QuantumEff::applyHeisenberg(f, y);
    benchmark::DoNotOptimize(out.blocks.data());
  }
}
BENCHMARK(BM_KrausHeisenberg)->Arg(2)->Arg(4);

void BM_BayesSuiteProb(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.instance = "prob";
  cfg.seed = 5;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LawReport r = law::runSuite("bayes", cfg);
    benchmark::DoNotOptimize(r.trials);
  }
}
BENCHMARK(BM_BayesSuiteProb)->Arg(100)->Arg(500);

void BM_TelosSuite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.instance = "quantum";
  cfg.seed = 6;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LawReport r = law::runSuite("telos-postulates", cfg);
    benchmark::DoNotOptimize(r.trials);
  }
}
BENCHMARK(BM_TelosSuite)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
