#include <benchmark/benchmark.h>

#include "tlboplan/cost.hpp"
#include "tlboplan/mstlbo.hpp"
#include "tlboplan/optimizer.hpp"
#include "tlboplan/scenario.hpp"

using namespace tlboplan;

namespace {

const Scenario& canonical() {
  static const Scenario s = load_scenario(TLBOPLAN_DATA_DIR "/scenarios/canonical.json");
  return s;
}

void BM_EvaluateCanonical(benchmark::State& state) {
  const auto& scenario = canonical();
  const CostWeights weights;
  Rng rng(1);
  const auto bounds = path_gene_bounds(scenario);
  std::vector<double> genes(bounds.size());
  for (std::size_t k = 0; k < genes.size(); ++k) genes[k] = bounds.lower[k] + bounds.range(k) * rng.uniform01();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(genes, scenario, weights));
}
BENCHMARK(BM_EvaluateCanonical);

void BM_MstlboIteration(benchmark::State& state) {
  const PathProblem problem(canonical(), CostWeights{});
  OptimizerConfig config;
  config.variant = Variant::kMstlbo;
  config.max_fes = 1u << 30;
  const auto layout = SubjectLayout::from_options(config.mstlbo, problem.dimension());
  auto s = init_population(problem, config);
  s.chaos = init_chaos(s.rng);
  for (auto _ : state) mstlbo_iteration(s, problem, config, layout);
}
BENCHMARK(BM_MstlboIteration);

void BM_TlboIteration(benchmark::State& state) {
  const PathProblem problem(canonical(), CostWeights{});
  OptimizerConfig config;
  config.max_fes = 1u << 30;
  auto s = init_population(problem, config);
  for (auto _ : state) tlbo_iteration(s, problem, config);
}
BENCHMARK(BM_TlboIteration);

// Full run at the canonical budget, per variant.
void BM_FullRun(benchmark::State& state) {
  const PathProblem problem(canonical(), CostWeights{});
  OptimizerConfig config;
  config.variant = static_cast<Variant>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(run(problem, config));
  }
}
BENCHMARK(BM_FullRun)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
