#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tlboplan/cost.hpp"
#include "tlboplan/scenario.hpp"

namespace tlboplan {

// Per-gene box [lower_k, upper_k].
struct GeneBounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  double range(std::size_t k) const { return upper[k] - lower[k]; }
  void clamp(std::span<double> genes) const;
  bool contains(std::span<const double> genes) const;
};

// Fitness interface the optimizers minimise.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual const GeneBounds& bounds() const = 0;
  virtual CostBreakdown evaluate(std::span<const double> genes) const = 0;

  std::size_t dimension() const { return bounds().size(); }
};

// x/y genes span the world bounds, z genes span the altitude corridor.
GeneBounds path_gene_bounds(const Scenario& scenario);

class PathProblem final : public Problem {
 public:
  PathProblem(Scenario scenario, CostWeights weights);

  const GeneBounds& bounds() const override { return bounds_; }
  CostBreakdown evaluate(std::span<const double> genes) const override;

  const Scenario& scenario() const { return scenario_; }
  const CostWeights& weights() const { return weights_; }

 private:
  Scenario scenario_;
  CostWeights weights_;
  GeneBounds bounds_;
};

}  // namespace tlboplan
