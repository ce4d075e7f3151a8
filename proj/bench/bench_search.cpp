#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dident/census.hpp"
#include "dident/formula_catalog.hpp"
#include "dident/repalg.hpp"
#include "dident/search.hpp"

using namespace dident;

namespace {

void run_search(benchmark::State& state, const char* group, const char* fid, Strategy s, unsigned workers) {
  const auto& g = named_group(group);
  const auto& ude = formula(fid).ude;
  SearchConfig cfg;
  cfg.strategy = s;
  cfg.workers = workers;
  for (auto _ : state) {
    auto v = is_didentity(g, ude, cfg);
    benchmark::DoNotOptimize(v.status);
    state.counters["nodes"] = static_cast<double>(v.stats.nodes);
  }
}

// 3.7 in A5: 60^3 assignments, small enough for the exhaustive reference.
void BM_ExhaustiveA5(benchmark::State& st) { run_search(st, "A5", "3.7", Strategy::Exhaustive, 1); }
void BM_BacktrackA5Serial(benchmark::State& st) { run_search(st, "A5", "3.7", Strategy::Backtrack, 1); }
void BM_BacktrackA5Parallel(benchmark::State& st) { run_search(st, "A5", "3.7", Strategy::Backtrack, 0); }
void BM_BacktrackA6Serial(benchmark::State& st) { run_search(st, "A6", "4.3", Strategy::Backtrack, 1); }
void BM_BacktrackA6Parallel(benchmark::State& st) { run_search(st, "A6", "4.3", Strategy::Backtrack, 0); }
void BM_BacktrackS5Serial(benchmark::State& st) { run_search(st, "S5", "3.7", Strategy::Backtrack, 1); }
void BM_BacktrackS5Parallel(benchmark::State& st) { run_search(st, "S5", "3.7", Strategy::Backtrack, 0); }

std::vector<AlgebraElement> random_elements(const FiniteGroup& g, PrimeField f, unsigned k) {
  std::mt19937_64 rng(7);
  std::vector<AlgebraElement> xs;
  for (unsigned i = 0; i < k; ++i) {
    auto a = AlgebraElement::zero(g, f);
    for (Elem x = 0; x < g.order(); ++x)
      a.set(x, static_cast<std::uint32_t>(rng() % f.p));
    xs.push_back(a);
  }
  return xs;
}

void BM_StandardSubsetDP(benchmark::State& state) {
  const auto& g = named_group("S3");
  auto xs = random_elements(g, PrimeField(7), static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_standard(xs));
}

void BM_StandardReference(benchmark::State& state) {
  const auto& g = named_group("S3");
  auto xs = random_elements(g, PrimeField(7), static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_standard_reference(xs));
}

} // namespace

BENCHMARK(BM_ExhaustiveA5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackA5Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackA5Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackA6Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackA6Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackS5Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackS5Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardSubsetDP)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StandardReference)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
