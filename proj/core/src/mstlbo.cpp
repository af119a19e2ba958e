#include "tlboplan/mstlbo.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tlboplan {

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) < tol; }

}  // namespace

ChaosState chaos_step(ChaosState state) { return {4.0 * state.x * (1.0 - state.x)}; }

bool chaos_degenerate(ChaosState state) {
  const double x = state.x;
  return !(x > 0.0 && x < 1.0) || x == 0.25 || x == 0.5 || x == 0.75;
}

ChaosState init_chaos(Rng& rng) {
  for (;;) {
    const double x = 0.01 + 0.98 * rng.uniform01();
    if (x <= 0.01) continue;
    if (near(x, 0.25, 1e-6) || near(x, 0.5, 1e-6) || near(x, 0.75, 1e-6)) continue;
    return {x};
  }
}

void advance_chaos(ChaosState& state, Rng& rng) {
  state = chaos_step(state);
  if (chaos_degenerate(state)) state = init_chaos(rng);
}

double mutation_probability(std::size_t fes, std::size_t max_fes) {
  if (max_fes == 0) return 0.0;
  return 1.0 - static_cast<double>(fes) / static_cast<double>(max_fes);
}

double mutation_offset(ChaosState state) { return 2.0 * state.x - 1.0; }

std::vector<double> mutate_teacher(const Candidate& teacher, ChaosState& chaos, double probability,
                                   Rng& rng, const GeneBounds& bounds, double scale) {
  std::vector<double> out = teacher.genes;
  if (probability <= 0.0) return out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (rng.uniform01() < probability) {
      out[k] += mutation_offset(chaos) * scale * bounds.range(k);
      advance_chaos(chaos, rng);
    }
  }
  bounds.clamp(out);
  return out;
}

Acceptance elite_replace_worst(OptimizerState& state, std::vector<double> proposed,
                               const Problem& problem) {
  auto cost = try_evaluate(problem, state, proposed);
  if (!cost) return Acceptance::kBudgetExhausted;
  auto& worst = state.population[worst_index(state.population)];
  if (!(cost->total < worst.total())) return Acceptance::kRejected;
  worst.genes = std::move(proposed);
  worst.cost = cost;
  if (worst.total() < state.best.total()) state.best = worst;
  return Acceptance::kAccepted;
}

SubjectLayout::SubjectLayout(std::vector<std::vector<std::size_t>> slices)
    : slices_(std::move(slices)) {
  if (slices_.empty()) throw std::invalid_argument("subject layout needs at least one subject");
  for (const auto& s : slices_) {
    if (s.empty()) throw std::invalid_argument("subject layout has an empty subject");
    dimension_ += s.size();
  }
  std::vector<bool> seen(dimension_, false);
  for (const auto& s : slices_) {
    for (std::size_t k : s) {
      if (k >= dimension_ || seen[k]) {
        throw std::invalid_argument("subject layout must cover every gene exactly once");
      }
      seen[k] = true;
    }
  }
}

SubjectLayout SubjectLayout::strided(std::size_t dimension, std::size_t subjects) {
  if (subjects < 1 || subjects > dimension) {
    throw std::invalid_argument("number_of_subject must be in [1, dimension]");
  }
  std::vector<std::vector<std::size_t>> slices(subjects);
  for (std::size_t k = 0; k < dimension; ++k) slices[k % subjects].push_back(k);
  return SubjectLayout(std::move(slices));
}

SubjectLayout SubjectLayout::contiguous(std::size_t dimension, std::size_t subjects) {
  if (subjects < 1 || subjects > dimension) {
    throw std::invalid_argument("number_of_subject must be in [1, dimension]");
  }
  std::vector<std::vector<std::size_t>> slices(subjects);
  // First (dimension % subjects) blocks get one extra gene.
  const std::size_t base = dimension / subjects;
  const std::size_t extra = dimension % subjects;
  std::size_t k = 0;
  for (std::size_t s = 0; s < subjects; ++s) {
    const std::size_t len = base + (s < extra ? 1 : 0);
    for (std::size_t j = 0; j < len; ++j) slices[s].push_back(k++);
  }
  return SubjectLayout(std::move(slices));
}

SubjectLayout SubjectLayout::from_options(const MstlboOptions& options, std::size_t dimension) {
  switch (options.subject_layout) {
    case SubjectLayoutKind::kAxis:
      return strided(dimension, options.number_of_subject.value_or(std::min<std::size_t>(3, dimension)));
    case SubjectLayoutKind::kPerWaypoint:
      return contiguous(dimension,
                        options.number_of_subject.value_or(std::max<std::size_t>(1, dimension / 3)));
  }
  throw std::invalid_argument("unknown subject layout");
}

std::vector<double> draw_subject_r(Rng& rng, const SubjectLayout& layout, bool scalar_r) {
  std::vector<double> r(layout.dimension());
  for (const auto& slice : layout.slices()) {
    if (scalar_r) {
      const double shared = rng.uniform01();
      for (std::size_t k : slice) r[k] = shared;
    } else {
      for (std::size_t k : slice) r[k] = rng.uniform01();
    }
  }
  return r;
}

std::vector<double> subject_step(std::span<const double> base, std::span<const double> toward,
                                 std::span<const double> away, std::span<const double> r,
                                 const GeneBounds& bounds) {
  std::vector<double> out(base.begin(), base.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += r[k] * (toward[k] - away[k]);
  bounds.clamp(out);
  return out;
}

std::vector<double> multi_subject_learner_step(const Candidate& learner, const Candidate& partner,
                                               const SubjectLayout& layout, Rng& rng,
                                               const GeneBounds& bounds, bool scalar_r) {
  const auto r = draw_subject_r(rng, layout, scalar_r);
  // A better learner pushes further away from its partner; a worse one moves toward it.
  if (learner.total() < partner.total()) {
    return subject_step(learner.genes, learner.genes, partner.genes, r, bounds);
  }
  return subject_step(learner.genes, partner.genes, learner.genes, r, bounds);
}

std::vector<double> multi_subject_classic_step(const Candidate& learner, const Candidate& m,
                                               const Candidate& n, const SubjectLayout& layout,
                                               Rng& rng, const GeneBounds& bounds, bool scalar_r) {
  const auto r = draw_subject_r(rng, layout, scalar_r);
  if (m.total() < n.total()) return subject_step(learner.genes, m.genes, n.genes, r, bounds);
  return subject_step(learner.genes, n.genes, m.genes, r, bounds);
}

bool mstlbo_iteration(OptimizerState& state, const Problem& problem, const OptimizerConfig& config,
                      const SubjectLayout& layout) {
  const auto& bounds = problem.bounds();
  const auto& options = config.mstlbo;
  auto& pop = state.population;

  advance_chaos(state.chaos, state.rng);

  const double probability = options.fixed_mutation_probability.value_or(
      mutation_probability(state.fes, state.max_fes));
  auto probe = mutate_teacher(state.best, state.chaos, probability, state.rng, bounds,
                              options.mutation_scale);
  // An untouched copy of the teacher carries no information; skip its evaluation.
  if (probe != state.best.genes &&
      elite_replace_worst(state, std::move(probe), problem) == Acceptance::kBudgetExhausted) {
    return false;
  }

  for (std::size_t i = 0; i < pop.size(); ++i) {
    std::vector<double> proposed;
    if (options.learner_style == LearnerStyle::kClassic) {
      const auto [m, n] = pick_two_others(state.rng, pop.size(), i);
      proposed = multi_subject_classic_step(pop[i], pop[m], pop[n], layout, state.rng, bounds,
                                            config.scalar_r);
    } else {
      const std::size_t k = pick_other(state.rng, pop.size(), i);
      proposed = multi_subject_learner_step(pop[i], pop[k], layout, state.rng, bounds,
                                            config.scalar_r);
    }
    if (greedy_accept(pop[i], std::move(proposed), problem, state) ==
        Acceptance::kBudgetExhausted) {
      return false;
    }
  }
  return true;
}

}  // namespace tlboplan
