#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tlboplan/optimizer.hpp"
#include "tlboplan/tlbo.hpp"

namespace tlboplan {

ChaosState chaos_step(ChaosState state);

// True on the orbits that collapse to a fixed point (0, 0.25, 0.5, 0.75, 1).
bool chaos_degenerate(ChaosState state);

// Uniform in (0.01, 0.99), redrawn while within 1e-6 of 0.25, 0.5 or 0.75.
ChaosState init_chaos(Rng& rng);

// One logistic step; reinitialises from rng if the orbit degenerates.
void advance_chaos(ChaosState& state, Rng& rng);

// 1 - fes / max_fes.
double mutation_probability(std::size_t fes, std::size_t max_fes);

// 2x - 1, in [-1, 1].
double mutation_offset(ChaosState state);

// Each gene independently, with probability `probability`, moves by
// offset * scale * range_k using the current chaos value, which is then
// advanced. Consumes one uniform per gene unless probability <= 0.
std::vector<double> mutate_teacher(const Candidate& teacher, ChaosState& chaos, double probability,
                                   Rng& rng, const GeneBounds& bounds, double scale);

// Evaluates the proposal and swaps it in for the worst learner on strict improvement.
Acceptance elite_replace_worst(OptimizerState& state, std::vector<double> proposed,
                               const Problem& problem);

// Partition of gene indices into subjects updated with independent draws.
class SubjectLayout {
 public:
  static SubjectLayout strided(std::size_t dimension, std::size_t subjects);
  static SubjectLayout contiguous(std::size_t dimension, std::size_t subjects);
  static SubjectLayout from_options(const MstlboOptions& options, std::size_t dimension);

  explicit SubjectLayout(std::vector<std::vector<std::size_t>> slices);

  std::size_t num_subjects() const { return slices_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<std::vector<std::size_t>>& slices() const { return slices_; }

 private:
  std::vector<std::vector<std::size_t>> slices_;
  std::size_t dimension_ = 0;
};

// Per-gene r in layout order: subject by subject, genes in slice order.
// scalar_r draws one value per subject.
std::vector<double> draw_subject_r(Rng& rng, const SubjectLayout& layout, bool scalar_r);

// base + r * (toward - away) on every gene, clamped. r is indexed by gene.
std::vector<double> subject_step(std::span<const double> base, std::span<const double> toward,
                                 std::span<const double> away, std::span<const double> r,
                                 const GeneBounds& bounds);

// Two-solution learner update of i with partner k.
std::vector<double> multi_subject_learner_step(const Candidate& learner, const Candidate& partner,
                                               const SubjectLayout& layout, Rng& rng,
                                               const GeneBounds& bounds, bool scalar_r);

// Classic-style update of i along the (m, n) difference, per subject.
std::vector<double> multi_subject_classic_step(const Candidate& learner, const Candidate& m,
                                               const Candidate& n, const SubjectLayout& layout,
                                               Rng& rng, const GeneBounds& bounds, bool scalar_r);

// Chaos update, elite probe, then the multi-subject learner phase.
bool mstlbo_iteration(OptimizerState& state, const Problem& problem, const OptimizerConfig& config,
                      const SubjectLayout& layout);

}  // namespace tlboplan
