#include "tlboplan/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tlboplan/mstlbo.hpp"
#include "tlboplan/tlbo.hpp"

namespace tlboplan {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kTlbo: return "tlbo";
    case Variant::kMstlbo: return "mstlbo";
    case Variant::kRandomSearch: return "random_search";
  }
  return "unknown";
}

std::string_view to_string(LearnerStyle s) {
  return s == LearnerStyle::kClassic ? "classic" : "two_solution";
}

std::string_view to_string(SubjectLayoutKind k) {
  return k == SubjectLayoutKind::kPerWaypoint ? "per_waypoint" : "axis";
}

Variant parse_variant(std::string_view name) {
  if (name == "tlbo") return Variant::kTlbo;
  if (name == "mstlbo" || name == "ms-tlbo") return Variant::kMstlbo;
  if (name == "random_search" || name == "random") return Variant::kRandomSearch;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

LearnerStyle parse_learner_style(std::string_view name) {
  if (name == "two_solution") return LearnerStyle::kTwoSolution;
  if (name == "classic") return LearnerStyle::kClassic;
  throw std::invalid_argument("unknown learner_style '" + std::string(name) + "'");
}

SubjectLayoutKind parse_subject_layout(std::string_view name) {
  if (name == "axis") return SubjectLayoutKind::kAxis;
  if (name == "per_waypoint") return SubjectLayoutKind::kPerWaypoint;
  throw std::invalid_argument("unknown subject_layout '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
  if (population_size < 4) throw std::invalid_argument("population size must be at least 4");
  if (max_fes < population_size) throw std::invalid_argument("max_fes must be >= population size");
  if (!std::isfinite(mstlbo.mutation_scale) || mstlbo.mutation_scale < 0.0) {
    throw std::invalid_argument("mutation_scale must be a non-negative number");
  }
  if (mstlbo.number_of_subject && *mstlbo.number_of_subject < 1) {
    throw std::invalid_argument("number_of_subject must be at least 1");
  }
  if (const auto& p = mstlbo.fixed_mutation_probability; p && !(*p >= 0.0 && *p <= 1.0)) {
    throw std::invalid_argument("fixed mutation probability must lie in [0, 1]");
  }
}

std::optional<CostBreakdown> try_evaluate(const Problem& problem, OptimizerState& state,
                                          std::span<const double> genes) {
  if (state.exhausted()) return std::nullopt;
  ++state.fes;
  return problem.evaluate(genes);
}

std::size_t worst_index(std::span<const Candidate> population) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].total() > population[worst].total()) worst = i;
  }
  return worst;
}

double mean_cost(std::span<const Candidate> population) {
  double sum = 0.0;
  for (const auto& c : population) sum += c.total();
  return population.empty() ? 0.0 : sum / static_cast<double>(population.size());
}

void record_trace(OptimizerState& state) {
  state.trace.push_back({state.iteration, state.fes, state.best.total(), mean_cost(state.population)});
}

RunResult run(const Problem& problem, const OptimizerConfig& config, const RunOptions& options) {
  auto state = init_population(problem, config, options.seeded_genes);

  std::optional<SubjectLayout> layout;
  if (config.variant == Variant::kMstlbo) {
    layout = SubjectLayout::from_options(config.mstlbo, problem.dimension());
    state.chaos = init_chaos(state.rng);
  }

  record_trace(state);
  if (options.observer) options.observer(state);

  while (!state.exhausted()) {
    bool complete = false;
    switch (config.variant) {
      case Variant::kTlbo: complete = tlbo_iteration(state, problem, config); break;
      case Variant::kMstlbo: complete = mstlbo_iteration(state, problem, config, *layout); break;
      case Variant::kRandomSearch: complete = random_search_iteration(state, problem); break;
    }
    ++state.iteration;
    record_trace(state);
    if (options.observer) options.observer(state);
    if (!complete) break;
  }

  return {state.best, std::move(state.trace), state.fes, state.iteration};
}

RunResult run(const Scenario& scenario, const OptimizerConfig& config, const CostWeights& weights,
              const RunOptions& options) {
  const PathProblem problem(scenario, weights);
  return run(problem, config, options);
}

}  // namespace tlboplan
