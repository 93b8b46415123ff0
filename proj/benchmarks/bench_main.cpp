#include <benchmark/benchmark.h>

#include <dtgap/bundle.hpp>
#include <dtgap/construction.hpp>
#include <dtgap/generator.hpp>
#include <dtgap/grid.hpp>
#include <dtgap/metrics.hpp>
#include <dtgap/oracles.hpp>
#include <dtgap/parity.hpp>
#include <dtgap/setcover.hpp>
#include <dtgap/suite.hpp>

namespace {

using namespace dtgap;

static void BM_exact_opt(benchmark::State& state) {
  auto inst = random_instance(static_cast<int>(state.range(0)), 8, 12345);
  Guards guards;
  for (auto _ : state) benchmark::DoNotOptimize(exact_opt(inst, guards).size);
}
BENCHMARK(BM_exact_opt)->Arg(6)->Arg(10)->Arg(14);

static void BM_opt_tree_dp(benchmark::State& state) {
  auto inst = example_instance();
  auto amp = amplify_function(build_base_function(inst), 2);
  auto lifted = amplify_distribution(build_base_distribution(inst), 2).to_explicit();
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(opt_tree_dp(amp.ref(), lifted, budget).min_error);
}
BENCHMARK(BM_opt_tree_dp)->Arg(1)->Arg(2)->Arg(3);

static void BM_opt_tree_dp_abort(benchmark::State& state) {
  auto inst = example_instance();
  auto f = build_base_function(inst);
  auto d = build_base_distribution(inst);
  const int budget = static_cast<int>(state.range(0));
  const Rat delta(39, 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(opt_tree_dp(f.ref(), d, budget, delta).min_error);
}
BENCHMARK(BM_opt_tree_dp_abort)->Arg(2)->Arg(4);

static void BM_min_dist_dnf(benchmark::State& state) {
  auto inst = example_instance();
  auto neg = negate_table(build_base_function(inst));
  auto d = build_base_distribution(inst);
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(min_dist_dnf(neg.ref(), d, terms, 2).min_error);
}
BENCHMARK(BM_min_dist_dnf)->Arg(1)->Arg(2);

static void BM_declared_target(benchmark::State& state) {
  auto gen = build_generator(example_instance(), static_cast<int>(state.range(0)));
  Guards guards;
  for (auto _ : state) benchmark::DoNotOptimize(gen.declared_target(guards).atoms.size());
}
BENCHMARK(BM_declared_target)->Arg(2)->Arg(3);

static void BM_dist_exact_lifted(benchmark::State& state) {
  auto inst = example_instance();
  auto amp = amplify_function(build_base_function(inst), 2);
  auto lifted = amplify_distribution(build_base_distribution(inst), 2).to_explicit();
  auto tree = cover_junta_tree({0, 1}, BlockShape{5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(dist_exact(tree, amp.ref(), lifted));
}
BENCHMARK(BM_dist_exact_lifted);

static void BM_parity_complete(benchmark::State& state) {
  BlockShape shape{16, 4};
  Word acc = 0;
  for (auto _ : state) {
    for (Word z = 0; z < 64; ++z) acc ^= parity_complete(z * 0x9e3779b97f4a7c15ULL, z, shape, 2);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_parity_complete);

static void BM_generator_run(benchmark::State& state) {
  auto gen = xor_power_generator(build_generator(example_instance(), 2), 2);
  Word acc = 0;
  Word seed = 0;
  for (auto _ : state) {
    acc ^= gen.run(seed++);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_generator_run);

} // namespace

BENCHMARK_MAIN();
