#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "zipfkit/frequency.hpp"
#include "zipfkit/generators.hpp"
#include "zipfkit/powerlaw.hpp"
#include "zipfkit/segments.hpp"
#include "zipfkit/stats.hpp"

using namespace zipfkit;

namespace {

const ingest::TokenStream& dual_stream() {
  static const ingest::TokenStream s = [] {
    gen::DualConfig d;
    d.n_tokens = 1000000;
    d.seed = 1;
    return gen::dual_generate(d);
  }();
  return s;
}

void BM_Count(benchmark::State& state) {
  const auto& s = dual_stream();
  for (auto _ : state) benchmark::DoNotOptimize(freq::count(s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.token_count()));
}
BENCHMARK(BM_Count)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto table = freq::count(dual_stream());
  for (auto _ : state) benchmark::DoNotOptimize(freq::rank(table));
}
BENCHMARK(BM_Rank)->Unit(benchmark::kMillisecond);

void BM_ThreeSegmentFit(benchmark::State& state) {
  const auto pts = freq::rank(freq::count(dual_stream())).as_points();
  for (auto _ : state) benchmark::DoNotOptimize(fit::fit_three_segments(pts, {200, 3000}));
}
BENCHMARK(BM_ThreeSegmentFit)->Unit(benchmark::kMillisecond);

void BM_ShiftedFit(benchmark::State& state) {
  std::vector<Point> pts;
  for (int i = 1; i <= state.range(0); ++i) pts.push_back({double(i), std::pow(i + 40.0, -2.5)});
  for (auto _ : state) benchmark::DoNotOptimize(fit::fit_shifted_powerlaw(pts));
}
BENCHMARK(BM_ShiftedFit)->Arg(50)->Arg(500)->Arg(5000);

void BM_BoundsSearch(benchmark::State& state) {
  const auto pts = freq::rank(freq::count(dual_stream())).as_points();
  const auto grid = fit::make_bounds_grid({50, 500}, {1000, 5000}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fit::search_bounds(pts, grid));
}
BENCHMARK(BM_BoundsSearch)->Unit(benchmark::kMillisecond)->Iterations(1);

template <class Config, class Fn>
void run_generator(benchmark::State& state, Config cfg, Fn fn) {
  cfg.n_tokens = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Simon(benchmark::State& state) { run_generator(state, gen::SimonConfig{}, gen::simon_generate); }
void BM_Typing(benchmark::State& state) { run_generator(state, gen::TypingConfig{}, gen::typing_generate); }
void BM_Dual(benchmark::State& state) { run_generator(state, gen::DualConfig{}, gen::dual_generate); }
BENCHMARK(BM_Simon)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Typing)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dual)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_RankSumExact(benchmark::State& state) {
  std::vector<double> a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a.push_back(i * 1.3);
    b.push_back(i * 1.1 + 0.5);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(stats::wilcoxon_rank_sum(a, b, stats::WilcoxonMode::exact));
}
BENCHMARK(BM_RankSumExact)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
