#include "tlboplan/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tlboplan {

void CostWeights::validate() const {
  bool any_positive = false;
  for (double b : beta) {
    if (!std::isfinite(b) || b < 0.0) throw std::invalid_argument("weights.beta must be >= 0");
    any_positive = any_positive || b > 0.0;
  }
  if (!any_positive) throw std::invalid_argument("weights.beta needs at least one positive entry");
  if (!std::isfinite(violation_cost) || !(violation_cost > 0.0)) {
    throw std::invalid_argument("weights.violation_cost must be positive and finite");
  }
}

double path_length(std::span<const Point3> path) {
  double length = 0.0;
  for (std::size_t l = 1; l < path.size(); ++l) length += distance(path[l - 1], path[l]);
  return length;
}

double obstacle_cost(std::span<const Point3> path, std::span<const Obstacle> obstacles) {
  if (obstacles.empty() || path.size() < 2) return 0.0;
  const std::size_t segments = path.size() - 1;
  double sum = 0.0;
  for (std::size_t l = 0; l < segments; ++l) {
    const Point3 mid = segment_midpoint(path[l], path[l + 1]);
    for (const auto& o : obstacles) {
      sum += std::max(1.0 - distance(mid, o.center) / o.safe_radius, 0.0);
    }
  }
  return sum / static_cast<double>(segments * obstacles.size());
}

AltitudeCost altitude_cost(std::span<const Point3> path, const Bounds& bounds,
                           double violation_cost) {
  AltitudeCost out;
  for (std::size_t l = 0; l + 1 < path.size(); ++l) {
    const double z = segment_midpoint(path[l], path[l + 1]).z;
    if (z <= 0.0) {
      out.value += violation_cost;
      out.violated = true;
    } else if (z > bounds.z_max) {
      out.value += z - bounds.z_max;
    } else if (z < bounds.z_min) {
      out.value += bounds.z_min - z;
    }
  }
  return out;
}

CostBreakdown evaluate_path(std::span<const Point3> path, const Scenario& scenario,
                            const CostWeights& weights) {
  CostBreakdown c;
  c.j1 = path_length(path);
  c.j2 = obstacle_cost(path, scenario.obstacles());
  const auto altitude = altitude_cost(path, scenario.bounds(), weights.violation_cost);
  c.j3 = altitude.value;
  c.violated = altitude.violated;
  c.total = weights.beta[0] * c.j1 + weights.beta[1] * c.j2 + weights.beta[2] * c.j3;
  if (c.violated) c.total += weights.violation_cost;
  return c;
}

CostBreakdown evaluate(std::span<const double> genes, const Scenario& scenario,
                       const CostWeights& weights) {
  const auto path = decode(genes, scenario);
  return evaluate_path(path, scenario, weights);
}

}  // namespace tlboplan
