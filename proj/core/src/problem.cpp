#include "tlboplan/problem.hpp"

#include <algorithm>
#include <utility>

namespace tlboplan {

void GeneBounds::clamp(std::span<double> genes) const {
  for (std::size_t k = 0; k < genes.size(); ++k) {
    genes[k] = std::clamp(genes[k], lower[k], upper[k]);
  }
}

bool GeneBounds::contains(std::span<const double> genes) const {
  if (genes.size() != size()) return false;
  for (std::size_t k = 0; k < genes.size(); ++k) {
    if (!(genes[k] >= lower[k] && genes[k] <= upper[k])) return false;
  }
  return true;
}

GeneBounds path_gene_bounds(const Scenario& scenario) {
  const auto& b = scenario.bounds();
  GeneBounds out;
  for (std::size_t w = 0; w < scenario.num_interior_waypoints(); ++w) {
    out.lower.insert(out.lower.end(), {b.lower.x, b.lower.y, b.z_min});
    out.upper.insert(out.upper.end(), {b.upper.x, b.upper.y, b.z_max});
  }
  return out;
}

PathProblem::PathProblem(Scenario scenario, CostWeights weights)
    : scenario_(std::move(scenario)), weights_(weights), bounds_(path_gene_bounds(scenario_)) {
  weights_.validate();
}

CostBreakdown PathProblem::evaluate(std::span<const double> genes) const {
  return tlboplan::evaluate(genes, scenario_, weights_);
}

}  // namespace tlboplan
