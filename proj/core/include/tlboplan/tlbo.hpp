#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tlboplan/optimizer.hpp"

// Classic teaching-learning phases. Step functions never mutate their inputs
// and return unevaluated, clamped gene vectors; acceptance is separate.
//
// Random stream order for one run (all draws from OptimizerState::rng):
//   init:    for each learner, for each gene: one uniform
//   teacher: for each learner: teaching factor index, then r draws
//   learner: for each learner: partner m, partner n, then r draws
// "r draws" is one uniform per gene, or a single uniform when scalar_r is set.

namespace tlboplan {

// draw * (upper - lower) + lower.
inline double init_gene(double draw, double lower, double upper) {
  return draw * (upper - lower) + lower;
}

OptimizerState init_population(const Problem& problem, const OptimizerConfig& config,
                               std::span<const std::vector<double>> seeded_genes = {});

std::vector<double> class_mean(std::span<const Candidate> population);

// D values; one shared draw broadcast to every gene when scalar_r is set.
std::vector<double> draw_r(Rng& rng, std::size_t dimension, bool scalar_r);

// learner + r * (teacher - teaching_factor * mean), clamped.
std::vector<double> teacher_step(std::span<const double> learner, std::span<const double> teacher,
                                 std::span<const double> mean, int teaching_factor,
                                 std::span<const double> r, const GeneBounds& bounds);

std::vector<double> teacher_phase_step(const Candidate& learner, const Candidate& teacher,
                                       std::span<const double> mean, Rng& rng,
                                       const GeneBounds& bounds, bool scalar_r);

// Steps along (better - worse) of the pair (m, n).
std::vector<double> learner_step(std::span<const double> learner, const Candidate& m,
                                 const Candidate& n, std::span<const double> r,
                                 const GeneBounds& bounds);

std::vector<double> learner_phase_step(const Candidate& learner, const Candidate& m,
                                       const Candidate& n, Rng& rng, const GeneBounds& bounds,
                                       bool scalar_r);

std::size_t pick_other(Rng& rng, std::size_t population_size, std::size_t exclude);
std::pair<std::size_t, std::size_t> pick_two_others(Rng& rng, std::size_t population_size,
                                                    std::size_t exclude);

enum class Acceptance { kAccepted, kRejected, kBudgetExhausted };

// Evaluates the proposal and keeps it only on strict improvement.
Acceptance greedy_accept(Candidate& incumbent, std::vector<double> proposed,
                         const Problem& problem, OptimizerState& state);

// One teacher phase plus one learner phase. Returns false once the budget ran out.
bool tlbo_iteration(OptimizerState& state, const Problem& problem, const OptimizerConfig& config);

// N uniform samples, each competing with the population slot it is drawn for.
bool random_search_iteration(OptimizerState& state, const Problem& problem);

}  // namespace tlboplan
