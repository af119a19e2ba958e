#include "tlboplan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace tlboplan {

namespace {

bool finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

Point3 point_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) {
    throw ScenarioError(field, "expected an array of 3 numbers");
  }
  for (const auto& v : j) {
    if (!v.is_number()) throw ScenarioError(field, "expected an array of 3 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

nlohmann::json point_to_json(const Point3& p) { return nlohmann::json::array({p.x, p.y, p.z}); }

const nlohmann::json& require(const nlohmann::json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) throw ScenarioError(field, "missing key");
  return j.at(key);
}

double number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) throw ScenarioError(field, "expected a number");
  return j.get<double>();
}

}  // namespace

double distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Point3 segment_midpoint(const Point3& a, const Point3& b) {
  return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0, (a.z + b.z) / 2.0};
}

bool Bounds::contains(const Point3& p) const {
  return p.x >= lower.x && p.x <= upper.x && p.y >= lower.y && p.y <= upper.y &&
         p.z >= lower.z && p.z <= upper.z;
}

ScenarioError::ScenarioError(std::string field, const std::string& what)
    : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

Scenario::Scenario(Bounds bounds, std::vector<Obstacle> obstacles, Point3 start, Point3 goal,
                   std::size_t num_interior_waypoints)
    : bounds_(bounds),
      obstacles_(std::move(obstacles)),
      start_(start),
      goal_(goal),
      waypoints_(num_interior_waypoints) {
  if (!finite(bounds_.lower)) throw ScenarioError("bounds.lower", "non-finite component");
  if (!finite(bounds_.upper)) throw ScenarioError("bounds.upper", "non-finite component");
  if (!(bounds_.lower.x < bounds_.upper.x && bounds_.lower.y < bounds_.upper.y &&
        bounds_.lower.z < bounds_.upper.z)) {
    throw ScenarioError("bounds", "lower must be strictly below upper on every axis");
  }
  if (!std::isfinite(bounds_.z_min) || !(bounds_.z_min > 0.0)) {
    throw ScenarioError("bounds.z_min", "must be positive");
  }
  if (!std::isfinite(bounds_.z_max) || !(bounds_.z_min < bounds_.z_max)) {
    throw ScenarioError("bounds.z_max", "must be greater than z_min");
  }
  if (bounds_.z_min < bounds_.lower.z || bounds_.z_max > bounds_.upper.z) {
    throw ScenarioError("bounds", "[z_min, z_max] must lie inside [lower.z, upper.z]");
  }
  for (std::size_t k = 0; k < obstacles_.size(); ++k) {
    const auto& o = obstacles_[k];
    const std::string field = "obstacles[" + std::to_string(k) + "]";
    if (!finite(o.center)) throw ScenarioError(field + ".center", "non-finite component");
    if (!std::isfinite(o.safe_radius) || !(o.safe_radius > 0.0)) {
      throw ScenarioError(field + ".safe_radius", "must be positive");
    }
  }
  auto check_endpoint = [&](const Point3& p, const char* field) {
    if (!finite(p)) throw ScenarioError(field, "non-finite component");
    if (!bounds_.contains(p)) throw ScenarioError(field, "outside bounds");
    for (const auto& o : obstacles_) {
      if (distance(p, o.center) < o.safe_radius) {
        throw ScenarioError(field, "inside an obstacle's safe radius");
      }
    }
  };
  check_endpoint(start_, "start");
  check_endpoint(goal_, "goal");
  if (start_ == goal_) throw ScenarioError("goal", "must differ from start");
  if (waypoints_ < 1) throw ScenarioError("num_interior_waypoints", "must be at least 1");
}

Scenario Scenario::without_obstacles() const { return {bounds_, {}, start_, goal_, waypoints_}; }

std::vector<double> encode(std::span<const Point3> waypoints, const Scenario& scenario) {
  if (waypoints.size() != scenario.num_interior_waypoints()) {
    throw EncodingError("expected " + std::to_string(scenario.num_interior_waypoints()) +
                        " interior waypoints, got " + std::to_string(waypoints.size()));
  }
  std::vector<double> genes;
  genes.reserve(3 * waypoints.size());
  for (const auto& p : waypoints) {
    genes.push_back(p.x);
    genes.push_back(p.y);
    genes.push_back(p.z);
  }
  return genes;
}

std::vector<Point3> interior_waypoints(std::span<const double> genes, const Scenario& scenario) {
  if (genes.size() != scenario.num_genes()) {
    throw EncodingError("expected " + std::to_string(scenario.num_genes()) + " genes, got " +
                        std::to_string(genes.size()));
  }
  std::vector<Point3> points;
  points.reserve(genes.size() / 3);
  for (std::size_t i = 0; i < genes.size(); i += 3) {
    points.push_back({genes[i], genes[i + 1], genes[i + 2]});
  }
  return points;
}

std::vector<Point3> decode(std::span<const double> genes, const Scenario& scenario) {
  auto interior = interior_waypoints(genes, scenario);
  std::vector<Point3> path;
  path.reserve(interior.size() + 2);
  path.push_back(scenario.start());
  path.insert(path.end(), interior.begin(), interior.end());
  path.push_back(scenario.goal());
  return path;
}

Scenario scenario_from_json(const nlohmann::json& doc) {
  const auto& b = require(doc, "bounds", "bounds");
  Bounds bounds;
  bounds.lower = point_from_json(require(b, "lower", "bounds.lower"), "bounds.lower");
  bounds.upper = point_from_json(require(b, "upper", "bounds.upper"), "bounds.upper");
  bounds.z_min = number(require(b, "z_min", "bounds.z_min"), "bounds.z_min");
  bounds.z_max = number(require(b, "z_max", "bounds.z_max"), "bounds.z_max");

  std::vector<Obstacle> obstacles;
  if (doc.contains("obstacles")) {
    const auto& list = doc.at("obstacles");
    if (!list.is_array()) throw ScenarioError("obstacles", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string field = "obstacles[" + std::to_string(k) + "]";
      Obstacle o;
      o.center = point_from_json(require(list[k], "center", field + ".center"), field + ".center");
      o.safe_radius =
          number(require(list[k], "safe_radius", field + ".safe_radius"), field + ".safe_radius");
      obstacles.push_back(o);
    }
  }
  const Point3 start = point_from_json(require(doc, "start", "start"), "start");
  const Point3 goal = point_from_json(require(doc, "goal", "goal"), "goal");
  const auto& w = require(doc, "num_interior_waypoints", "num_interior_waypoints");
  if (!w.is_number_integer() || w.get<long long>() < 0) {
    throw ScenarioError("num_interior_waypoints", "expected a non-negative integer");
  }
  return {bounds, std::move(obstacles), start, goal, w.get<std::size_t>()};
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
  nlohmann::json obstacles = nlohmann::json::array();
  for (const auto& o : scenario.obstacles()) {
    obstacles.push_back({{"center", point_to_json(o.center)}, {"safe_radius", o.safe_radius}});
  }
  const auto& b = scenario.bounds();
  return {{"bounds",
           {{"lower", point_to_json(b.lower)},
            {"upper", point_to_json(b.upper)},
            {"z_min", b.z_min},
            {"z_max", b.z_max}}},
          {"obstacles", obstacles},
          {"start", point_to_json(scenario.start())},
          {"goal", point_to_json(scenario.goal())},
          {"num_interior_waypoints", scenario.num_interior_waypoints()}};
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ScenarioError("file", "cannot open " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError("file", file.string() + ": " + e.what());
  }
  return scenario_from_json(doc);
}

}  // namespace tlboplan
