#include "tlboplan/tlbo.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tlboplan {

OptimizerState init_population(const Problem& problem, const OptimizerConfig& config,
                               std::span<const std::vector<double>> seeded_genes) {
  config.validate();
  const auto& bounds = problem.bounds();
  const std::size_t n = config.population_size;
  if (seeded_genes.size() > n) throw std::invalid_argument("more seeded candidates than population");

  OptimizerState state;
  state.rng = Rng(config.seed);
  state.max_fes = config.max_fes;
  state.population.resize(n);
  for (auto& c : state.population) {
    c.genes.resize(bounds.size());
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      c.genes[k] = init_gene(state.rng.uniform01(), bounds.lower[k], bounds.upper[k]);
    }
  }
  for (std::size_t i = 0; i < seeded_genes.size(); ++i) {
    if (seeded_genes[i].size() != bounds.size()) {
      throw std::invalid_argument("seeded candidate has wrong dimension");
    }
    state.population[i].genes = seeded_genes[i];
    bounds.clamp(state.population[i].genes);
  }

  for (auto& c : state.population) c.cost = try_evaluate(problem, state, c.genes);
  state.best = state.population.front();
  for (const auto& c : state.population) {
    if (c.total() < state.best.total()) state.best = c;
  }
  return state;
}

std::vector<double> class_mean(std::span<const Candidate> population) {
  if (population.empty()) throw std::invalid_argument("class_mean of an empty population");
  std::vector<double> mean(population.front().genes.size(), 0.0);
  for (const auto& c : population) {
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += c.genes[k];
  }
  for (auto& m : mean) m /= static_cast<double>(population.size());
  return mean;
}

std::vector<double> draw_r(Rng& rng, std::size_t dimension, bool scalar_r) {
  if (scalar_r) return std::vector<double>(dimension, rng.uniform01());
  std::vector<double> r(dimension);
  for (auto& v : r) v = rng.uniform01();
  return r;
}

std::vector<double> teacher_step(std::span<const double> learner, std::span<const double> teacher,
                                 std::span<const double> mean, int teaching_factor,
                                 std::span<const double> r, const GeneBounds& bounds) {
  std::vector<double> out(learner.begin(), learner.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] += r[k] * (teacher[k] - teaching_factor * mean[k]);
  }
  bounds.clamp(out);
  return out;
}

std::vector<double> teacher_phase_step(const Candidate& learner, const Candidate& teacher,
                                       std::span<const double> mean, Rng& rng,
                                       const GeneBounds& bounds, bool scalar_r) {
  const int teaching_factor = 1 + static_cast<int>(rng.index(2));
  const auto r = draw_r(rng, learner.genes.size(), scalar_r);
  return teacher_step(learner.genes, teacher.genes, mean, teaching_factor, r, bounds);
}

std::vector<double> learner_step(std::span<const double> learner, const Candidate& m,
                                 const Candidate& n, std::span<const double> r,
                                 const GeneBounds& bounds) {
  const bool m_better = m.total() < n.total();
  const auto& toward = m_better ? m.genes : n.genes;
  const auto& away = m_better ? n.genes : m.genes;
  std::vector<double> out(learner.begin(), learner.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += r[k] * (toward[k] - away[k]);
  bounds.clamp(out);
  return out;
}

std::vector<double> learner_phase_step(const Candidate& learner, const Candidate& m,
                                       const Candidate& n, Rng& rng, const GeneBounds& bounds,
                                       bool scalar_r) {
  const auto r = draw_r(rng, learner.genes.size(), scalar_r);
  return learner_step(learner.genes, m, n, r, bounds);
}

std::size_t pick_other(Rng& rng, std::size_t population_size, std::size_t exclude) {
  std::size_t j = rng.index(population_size - 1);
  if (j >= exclude) ++j;
  return j;
}

std::pair<std::size_t, std::size_t> pick_two_others(Rng& rng, std::size_t population_size,
                                                    std::size_t exclude) {
  const std::size_t m = pick_other(rng, population_size, exclude);
  std::size_t n = rng.index(population_size - 2);
  const std::size_t lo = std::min(m, exclude);
  const std::size_t hi = std::max(m, exclude);
  if (n >= lo) ++n;
  if (n >= hi) ++n;
  return {m, n};
}

Acceptance greedy_accept(Candidate& incumbent, std::vector<double> proposed,
                         const Problem& problem, OptimizerState& state) {
  auto cost = try_evaluate(problem, state, proposed);
  if (!cost) return Acceptance::kBudgetExhausted;
  if (!(cost->total < incumbent.total())) return Acceptance::kRejected;
  incumbent.genes = std::move(proposed);
  incumbent.cost = cost;
  if (incumbent.total() < state.best.total()) state.best = incumbent;
  return Acceptance::kAccepted;
}

bool tlbo_iteration(OptimizerState& state, const Problem& problem, const OptimizerConfig& config) {
  const auto& bounds = problem.bounds();
  auto& pop = state.population;

  const auto mean = class_mean(pop);
  const Candidate teacher = state.best;
  for (auto& learner : pop) {
    auto proposed = teacher_phase_step(learner, teacher, mean, state.rng, bounds, config.scalar_r);
    if (greedy_accept(learner, std::move(proposed), problem, state) ==
        Acceptance::kBudgetExhausted) {
      return false;
    }
  }

  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto [m, n] = pick_two_others(state.rng, pop.size(), i);
    auto proposed = learner_phase_step(pop[i], pop[m], pop[n], state.rng, bounds, config.scalar_r);
    if (greedy_accept(pop[i], std::move(proposed), problem, state) ==
        Acceptance::kBudgetExhausted) {
      return false;
    }
  }
  return true;
}

bool random_search_iteration(OptimizerState& state, const Problem& problem) {
  const auto& bounds = problem.bounds();
  for (auto& slot : state.population) {
    std::vector<double> genes(bounds.size());
    for (std::size_t k = 0; k < genes.size(); ++k) {
      genes[k] = init_gene(state.rng.uniform01(), bounds.lower[k], bounds.upper[k]);
    }
    if (greedy_accept(slot, std::move(genes), problem, state) == Acceptance::kBudgetExhausted) {
      return false;
    }
  }
  return true;
}

}  // namespace tlboplan
