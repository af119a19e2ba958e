#pragma once

#include <atomic>
#include <filesystem>
#include <string>
#include <vector>

#include "oracle/brute_force_cost.hpp"
#include "tlboplan/problem.hpp"
#include "tlboplan/random.hpp"
#include "tlboplan/scenario.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return TLBOPLAN_DATA_DIR; }
inline std::filesystem::path canonical_path() { return data_dir() / "scenarios" / "canonical.json"; }
inline std::filesystem::path canonical_config_path() { return data_dir() / "configs" / "canonical.json"; }

inline tlboplan::Scenario canonical() { return tlboplan::load_scenario(canonical_path()); }

// Uniform genes inside the path gene box, plus an occasional excursion below
// the corridor so every altitude branch gets exercised.
inline std::vector<double> random_genes(tlboplan::Rng& rng, const tlboplan::Scenario& s) {
  const auto& b = s.bounds();
  std::vector<double> g;
  for (std::size_t w = 0; w < s.num_interior_waypoints(); ++w) {
    g.push_back(b.lower.x + rng.uniform01() * (b.upper.x - b.lower.x));
    g.push_back(b.lower.y + rng.uniform01() * (b.upper.y - b.lower.y));
    g.push_back(-5.0 + rng.uniform01() * (b.upper.z + 10.0));
  }
  return g;
}

inline oracle::World to_world(const tlboplan::Scenario& s) {
  oracle::World w;
  w.start = {s.start().x, s.start().y, s.start().z};
  w.goal = {s.goal().x, s.goal().y, s.goal().z};
  for (const auto& o : s.obstacles()) w.spheres.push_back({o.center.x, o.center.y, o.center.z, o.safe_radius});
  w.z_min = s.bounds().z_min;
  w.z_max = s.bounds().z_max;
  return w;
}

// Counts evaluate() calls and records any out-of-box or out-of-range value it sees.
class InstrumentedProblem final : public tlboplan::Problem {
 public:
  explicit InstrumentedProblem(const tlboplan::Problem& inner) : inner_(inner) {}

  const tlboplan::GeneBounds& bounds() const override { return inner_.bounds(); }
  tlboplan::CostBreakdown evaluate(std::span<const double> genes) const override {
    ++calls;
    if (!inner_.bounds().contains(genes)) ++out_of_bounds;
    auto c = inner_.evaluate(genes);
    if (c.j2 < 0.0 || c.j2 > 1.0) ++j2_out_of_range;
    return c;
  }

  mutable std::size_t calls = 0;
  mutable std::size_t out_of_bounds = 0;
  mutable std::size_t j2_out_of_range = 0;

 private:
  const tlboplan::Problem& inner_;
};

}  // namespace testing
