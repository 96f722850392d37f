#include <benchmark/benchmark.h>

#include <cstddef>

#include "opxlab/coeffs.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "opxlab/szegofn.hpp"
#include "opxlab/szegomap.hpp"

using namespace opxlab;

namespace {

VerblunskySequence random_real(std::size_t length) {
  RandomSzegoParams p;
  p.seed = 11;
  p.length = length;
  p.real = true;
  return preset(Preset::RandomSzego, p);
}

}  // namespace

static void BM_SzegoChain(benchmark::State& state) {
  const auto seq = random_real(16);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(szego_chain(seq, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SzegoChain)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_Roots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto chain = szego_chain(random_real(16), n);
  const CPoly& p = chain[static_cast<std::size_t>(n)].phi_star;
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->RangeMultiplier(2)->Range(8, 64);

static void BM_SchurChain(benchmark::State& state) {
  const auto seq = random_real(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schur_chain(seq));
}
BENCHMARK(BM_SchurChain)->Arg(8)->Arg(32);

// exercises grid doubling from 1024 nodes
static void BM_SzegoD(benchmark::State& state) {
  const auto seq = preset(Preset::AppendedGeronimus);
  const auto chain = schur_chain(seq);
  const auto ev = SzegoEvaluator::from_chain(chain, seq, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(szego_D(ev, cplx{0.3, 0.2}));
}
BENCHMARK(BM_SzegoD)->Arg(256)->Arg(1024);

static void BM_MFunction(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const auto rec = geronimus(preset(Preset::AppendedGeronimus), K + 16);
  const auto sys = build_system(rec.b, rec.c);
  for (auto _ : state) benchmark::DoNotOptimize(m_function(sys, cplx{3.0, 0.5}, K));
}
BENCHMARK(BM_MFunction)->Arg(32)->Arg(128);
BENCHMARK_MAIN();
