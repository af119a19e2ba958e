#include <doctest.h>

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "tlboplan/scenario.hpp"

using namespace tlboplan;

namespace {

Bounds box() {
  Bounds b;
  b.lower = {0, 0, 0};
  b.upper = {10, 10, 10};
  b.z_min = 1;
  b.z_max = 9;
  return b;
}

Scenario line_scenario(std::size_t waypoints) {
  return {box(), {}, {0, 0, 5}, {10, 0, 5}, waypoints};
}

std::string field_of(const nlohmann::json& doc) {
  try {
    scenario_from_json(doc);
  } catch (const ScenarioError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("encode lays out waypoints as consecutive xyz triples") {
  const auto s1 = line_scenario(1);
  const std::vector<Point3> one{{1, 2, 3}};
  CHECK(encode(one, s1) == std::vector<double>{1, 2, 3});

  const auto s2 = line_scenario(2);
  const std::vector<Point3> two{{1, 2, 3}, {4, 5, 6}};
  CHECK(encode(two, s2) == std::vector<double>{1, 2, 3, 4, 5, 6});

  CHECK_THROWS_AS(encode(two, s1), EncodingError);
}

TEST_CASE("decode pins start and goal around the interior waypoints") {
  const auto s = line_scenario(1);
  const std::vector<double> genes{5, 0, 5};
  const auto path = decode(genes, s);
  REQUIRE(path.size() == 3);
  CHECK(path[0] == Point3{0, 0, 5});
  CHECK(path[1] == Point3{5, 0, 5});
  CHECK(path[2] == Point3{10, 0, 5});

  const auto s2 = line_scenario(2);
  CHECK(decode(std::vector<double>(6, 1.0), s2).size() == 4);
  CHECK(s2.num_segments() == 3);

  CHECK_THROWS_AS(decode(std::vector<double>(4, 1.0), s2), EncodingError);
}

TEST_CASE("encode/decode round trip is bit exact and endpoints stay fixed") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t w = 1 + rng.index(12);
    const auto s = line_scenario(w);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < w; ++i) {
      pts.push_back({rng.uniform01() * 1e3 - 500, std::ldexp(rng.uniform01(), -40),
                     rng.uniform01() * 1e-7});
    }
    const auto genes = encode(pts, s);
    CHECK(interior_waypoints(genes, s) == pts);
    const auto path = decode(genes, s);
    CHECK(path.front() == s.start());
    CHECK(path.back() == s.goal());
  }
}

TEST_CASE("zero interior waypoints is rejected") {
  CHECK_THROWS_AS(line_scenario(0), ScenarioError);
}

TEST_CASE("segment midpoint") {
  CHECK(segment_midpoint({0, 0, 0}, {2, 2, 2}) == Point3{1, 1, 1});
  CHECK(segment_midpoint({3, -4, 7}, {3, -4, 7}) == Point3{3, -4, 7});
  CHECK(segment_midpoint({0, 0, 0}, {1, 0, 0}) == Point3{0.5, 0, 0});
}

TEST_CASE("bundled canonical scenario loads") {
  const auto s = testing::canonical();
  CHECK(s.obstacles().size() == 6);
  CHECK(s.bounds().upper.x - s.bounds().lower.x == doctest::Approx(90.5));
  CHECK(s.bounds().upper.y - s.bounds().lower.y == doctest::Approx(50.5));
  CHECK(s.bounds().upper.z - s.bounds().lower.z == doctest::Approx(20.0));

  const auto round_trip = scenario_from_json(scenario_to_json(s));
  CHECK(round_trip.obstacles().size() == 6);
  CHECK(round_trip.start() == s.start());
  CHECK(round_trip.goal() == s.goal());
}

TEST_CASE("validation names the offending field") {
  std::ifstream in(testing::canonical_path());
  const auto base = nlohmann::json::parse(in);

  auto doc = base;
  doc["start"] = doc["obstacles"][0]["center"];
  CHECK(field_of(doc) == "start");

  doc = base;
  doc["bounds"]["z_max"] = doc["bounds"]["z_min"];
  CHECK(field_of(doc) == "bounds.z_max");

  doc = base;
  doc["bounds"]["z_min"] = 0.0;
  CHECK(field_of(doc) == "bounds.z_min");

  doc = base;
  doc["goal"] = doc["start"];
  CHECK(field_of(doc) == "goal");

  doc = base;
  doc["goal"] = {200.0, 1.0, 5.0};
  CHECK(field_of(doc) == "goal");

  doc = base;
  doc["obstacles"][2]["safe_radius"] = -1.0;
  CHECK(field_of(doc) == "obstacles[2].safe_radius");

  doc = base;
  doc["bounds"]["upper"] = {90.5, 50.5, 10.0};
  CHECK(field_of(doc) == "bounds");

  doc = base;
  doc.erase("start");
  CHECK(field_of(doc) == "start");

  doc = base;
  doc["num_interior_waypoints"] = 0;
  CHECK(field_of(doc) == "num_interior_waypoints");

  CHECK(field_of(base).empty());
}

TEST_CASE("load_scenario reports unreadable and malformed files") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ScenarioError);

  const auto tmp = std::filesystem::temp_directory_path() / "tlboplan_bad_scenario.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_scenario(tmp), ScenarioError);
  std::filesystem::remove(tmp);
}
