#include <benchmark/benchmark.h>

#include "idensity/sampling.hpp"
#include "idensity/topology.hpp"

using namespace idensity;

static void BM_NormalForm(benchmark::State& state) {
  Sampler sampler(1);
  std::vector<IndexSet> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(sampler.index_set());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(sets[i++ % sets.size()]));
}
BENCHMARK(BM_NormalForm);

static void BM_ILimsup(benchmark::State& state) {
  Sampler sampler(2);
  std::vector<PiecewiseSequence> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(sampler.sequence());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(i_limsup(xs[i++ % xs.size()], Ideal::density_zero()));
}
BENCHMARK(BM_ILimsup);

static void BM_IntervalUnion(benchmark::State& state) {
  Sampler sampler(3);
  std::vector<IntervalSet> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(sampler.interval_set());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sets[i % sets.size()] | sets[(i + 1) % sets.size()]);
    ++i;
  }
}
BENCHMARK(BM_IntervalUnion);

static void BM_Theta(benchmark::State& state) {
  Sampler sampler(4);
  std::vector<IntervalSet> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(sampler.interval_set());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(theta(sets[i++ % sets.size()], Ideal::density_zero()));
}
BENCHMARK(BM_Theta);

static void BM_Classify(benchmark::State& state) {
  Sampler sampler(5);
  std::vector<std::pair<IntervalSet, Rational>> cases;
  for (int i = 0; i < 64; ++i) {
    IntervalSet e = sampler.interval_set();
    Rational p = sampler.point_near(e);
    cases.emplace_back(e, p);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [e, p] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(classify_i_density(p, e, Ideal::density_zero()));
  }
}
BENCHMARK(BM_Classify);

static void BM_RatioSequence(benchmark::State& state) {
  IntervalGenerator k = square_blowup_generator(Rational(0));
  IntervalSet e = IntervalSet::parse("(-1,1)");
  for (auto _ : state) benchmark::DoNotOptimize(ratio_sequence(k, e));
}
BENCHMARK(BM_RatioSequence);

BENCHMARK_MAIN();
