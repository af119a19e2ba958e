#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlboplan/cost.hpp"
#include "tlboplan/problem.hpp"
#include "tlboplan/random.hpp"

namespace tlboplan {

enum class Variant { kTlbo, kMstlbo, kRandomSearch };

// kTwoSolution: learner i studies with one partner k (i, k compared directly).
// kClassic: learner i moves along the difference of two other learners m, n.
enum class LearnerStyle { kTwoSolution, kClassic };

// kAxis: strided subjects (all x genes, all y genes, all z genes for S = 3).
// kPerWaypoint: contiguous blocks of genes.
enum class SubjectLayoutKind { kAxis, kPerWaypoint };

std::string_view to_string(Variant v);
std::string_view to_string(LearnerStyle s);
std::string_view to_string(SubjectLayoutKind k);
Variant parse_variant(std::string_view name);
LearnerStyle parse_learner_style(std::string_view name);
SubjectLayoutKind parse_subject_layout(std::string_view name);

struct MstlboOptions {
  // Defaults to 3 for the axis layout and D / 3 for the per-waypoint layout.
  std::optional<std::size_t> number_of_subject;
  SubjectLayoutKind subject_layout = SubjectLayoutKind::kAxis;
  // Mutation step is mutation_scale * (upper_k - lower_k) times the chaotic offset.
  double mutation_scale = 0.1;
  LearnerStyle learner_style = LearnerStyle::kTwoSolution;
  // Overrides 1 - fes / max_fes when set.
  std::optional<double> fixed_mutation_probability;
};

struct OptimizerConfig {
  std::size_t population_size = 30;
  std::size_t max_fes = 20000;
  std::uint64_t seed = 0;
  Variant variant = Variant::kMstlbo;
  // One r per update instead of one per gene.
  bool scalar_r = false;
  MstlboOptions mstlbo;

  void validate() const;
};

struct Candidate {
  std::vector<double> genes;
  std::optional<CostBreakdown> cost;

  bool evaluated() const { return cost.has_value(); }
  double total() const { return cost.value().total; }
};

struct TraceRecord {
  std::size_t iteration = 0;
  std::size_t fes = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using ConvergenceTrace = std::vector<TraceRecord>;

// Logistic-map state X_n driving the mutation offsets.
struct ChaosState {
  double x = 0.0;
};

struct OptimizerState {
  std::vector<Candidate> population;
  Candidate best;
  std::size_t fes = 0;
  std::size_t max_fes = 0;
  std::size_t iteration = 0;
  Rng rng{0};
  ChaosState chaos;
  ConvergenceTrace trace;

  bool exhausted() const { return fes >= max_fes; }
};

// Evaluates through the budget: returns nullopt (and does not call the
// problem) once fes has reached max_fes, otherwise increments fes.
std::optional<CostBreakdown> try_evaluate(const Problem& problem, OptimizerState& state,
                                          std::span<const double> genes);

// Index of the highest-cost member; first one wins ties.
std::size_t worst_index(std::span<const Candidate> population);
double mean_cost(std::span<const Candidate> population);
void record_trace(OptimizerState& state);

struct RunOptions {
  // Replace the first members of the random initial population.
  std::vector<std::vector<double>> seeded_genes;
  // Called after initialisation and after every outer iteration.
  std::function<void(const OptimizerState&)> observer;
};

struct RunResult {
  Candidate best;
  ConvergenceTrace trace;
  std::size_t fes = 0;
  std::size_t iterations = 0;
};

RunResult run(const Problem& problem, const OptimizerConfig& config, const RunOptions& options = {});
RunResult run(const Scenario& scenario, const OptimizerConfig& config, const CostWeights& weights,
              const RunOptions& options = {});

}  // namespace tlboplan
