#pragma once

#include <array>
#include <span>

#include "tlboplan/scenario.hpp"

namespace tlboplan {

struct CostWeights {
  // Path length, obstacle clearance, altitude corridor.
  std::array<double, 3> beta{1.0, 100.0, 10.0};
  // Finite stand-in for the infinite penalty of flying at or below ground.
  // Must exceed any cost a non-violating path can reach.
  double violation_cost = 1e6;

  void validate() const;
};

struct CostBreakdown {
  double j1 = 0.0;  // meters
  double j2 = 0.0;  // in [0, 1]
  double j3 = 0.0;  // meters, plus violation_cost per grounded segment
  double total = 0.0;
  bool violated = false;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

struct AltitudeCost {
  double value = 0.0;
  bool violated = false;
};

double path_length(std::span<const Point3> path);

// Mean clearance penalty over every (segment midpoint, obstacle) pair.
// Zero for an empty obstacle list.
double obstacle_cost(std::span<const Point3> path, std::span<const Obstacle> obstacles);

AltitudeCost altitude_cost(std::span<const Point3> path, const Bounds& bounds,
                           double violation_cost);

CostBreakdown evaluate_path(std::span<const Point3> path, const Scenario& scenario,
                            const CostWeights& weights);
CostBreakdown evaluate(std::span<const double> genes, const Scenario& scenario,
                       const CostWeights& weights);

}  // namespace tlboplan
