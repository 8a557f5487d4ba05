#include "orecalc/oracle.hpp"
#include "orecalc/ore.hpp"
#include "orecalc/pbw.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace orecalc;

namespace {

// Sum of `terms` random words of length `degree` with small coefficients.
Element random_sum(const AlphabetPtr& alphabet, std::size_t terms, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Element out(alphabet);
  for (std::size_t k = 0; k < terms; ++k) {
    Word w(degree);
    for (auto& g : w) g = static_cast<Letter>(rng() % alphabet->size());
    out.add_term(w, Scalar::from_int(alphabet->ring(), static_cast<long>(rng() % 5) + 1));
  }
  return out;
}

const LiePresentation& so() {
  static const LiePresentation p = so13();
  return p;
}

const WeylTower& tower() {
  static const WeylTower t = [] {
    std::vector<std::optional<TowerLevel>> none;
    return build_weyl_tower(3, none);
  }();
  return t;
}

void BM_RewriteSo13(benchmark::State& state) {
  const Element a = random_sum(so().alphabet(), state.range(0), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_normal_form(so().presentation(), a));
}

void BM_PbwSerialSo13(benchmark::State& state) {
  const Element a = random_sum(so().alphabet(), state.range(0), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_normal_form_serial(so().presentation(), a));
}

void BM_PbwParallelSo13(benchmark::State& state) {
  const Element a = random_sum(so().alphabet(), state.range(0), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_normal_form_parallel(so().presentation(), a));
}

void BM_RewriteWeylTower(benchmark::State& state) {
  const Element a = random_sum(tower().presentation().alphabet(), state.range(0), 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tower().normalize(a));
}

void BM_PbwParallelWeylTower(benchmark::State& state) {
  const Element a = random_sum(tower().presentation().alphabet(), state.range(0), 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_normal_form_parallel(tower().presentation(), a));
}

void BM_EvaluateSerial(benchmark::State& state) {
  const Representation rep = vector_rep(so());
  const Element a = random_sum(so().alphabet(), state.range(0), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(rep, a));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const Representation rep = vector_rep(so());
  const Element a = random_sum(so().alphabet(), state.range(0), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(rep, a));
}

}  // namespace

BENCHMARK(BM_RewriteSo13)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PbwSerialSo13)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PbwParallelSo13)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RewriteWeylTower)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PbwParallelWeylTower)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateSerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
