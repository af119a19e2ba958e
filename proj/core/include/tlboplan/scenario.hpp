#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tlboplan {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;  // altitude above ground

  friend bool operator==(const Point3&, const Point3&) = default;
};

double distance(const Point3& a, const Point3& b);
Point3 segment_midpoint(const Point3& a, const Point3& b);

// Spherical keep-out zone. safe_radius already includes the clearance margin.
struct Obstacle {
  Point3 center;
  double safe_radius = 0.0;
};

struct Bounds {
  Point3 lower;
  Point3 upper;
  double z_min = 0.0;
  double z_max = 0.0;

  bool contains(const Point3& p) const;
};

// Raised for any scenario invariant violation; field() names the offending key.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scenario {
 public:
  // Validates every invariant; throws ScenarioError.
  Scenario(Bounds bounds, std::vector<Obstacle> obstacles, Point3 start, Point3 goal,
           std::size_t num_interior_waypoints);

  const Bounds& bounds() const { return bounds_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  const Point3& start() const { return start_; }
  const Point3& goal() const { return goal_; }
  std::size_t num_interior_waypoints() const { return waypoints_; }
  std::size_t num_genes() const { return 3 * waypoints_; }
  std::size_t num_segments() const { return waypoints_ + 1; }

  // Same world with the obstacle list removed.
  Scenario without_obstacles() const;

 private:
  Bounds bounds_;
  std::vector<Obstacle> obstacles_;
  Point3 start_;
  Point3 goal_;
  std::size_t waypoints_;
};

// genes[3l..3l+3] = (x, y, z) of interior waypoint l.
std::vector<double> encode(std::span<const Point3> waypoints, const Scenario& scenario);
std::vector<Point3> interior_waypoints(std::span<const double> genes, const Scenario& scenario);

// Full path P_0..P_L with P_0 = start and P_L = goal.
std::vector<Point3> decode(std::span<const double> genes, const Scenario& scenario);

Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& file);

}  // namespace tlboplan
