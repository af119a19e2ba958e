#pragma once

// Straight transcription of the path cost terms over raw arrays. Deliberately
// shares no code with the library: no Point3, no decode, no helpers.

#include <array>
#include <cmath>
#include <vector>

namespace oracle {

struct World {
  std::array<double, 3> start;
  std::array<double, 3> goal;
  std::vector<std::array<double, 4>> spheres;  // cx, cy, cz, safe radius
  double z_min;
  double z_max;
};

struct Terms {
  double j1;
  double j2;
  double j3;
  double total;
  bool grounded;
};

inline Terms brute_force_cost(const World& w, const std::vector<double>& genes,
                              const std::array<double, 3>& beta, double violation_cost) {
  // Points P_0..P_L.
  std::vector<std::array<double, 3>> p;
  p.push_back(w.start);
  for (std::size_t i = 0; i + 3 <= genes.size(); i += 3) p.push_back({genes[i], genes[i + 1], genes[i + 2]});
  p.push_back(w.goal);
  const std::size_t L = p.size() - 1;

  Terms t{0.0, 0.0, 0.0, 0.0, false};
  for (std::size_t l = 0; l < L; ++l) {
    double sq = 0.0;
    for (int a = 0; a < 3; ++a) sq += std::pow(p[l + 1][a] - p[l][a], 2);
    t.j1 += std::sqrt(sq);
  }

  const std::size_t K = w.spheres.size();
  if (K > 0) {
    double acc = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
      double c[3];
      for (int a = 0; a < 3; ++a) c[a] = 0.5 * (p[l][a] + p[l + 1][a]);
      for (std::size_t k = 0; k < K; ++k) {
        const auto& s = w.spheres[k];
        const double d = std::sqrt(std::pow(c[0] - s[0], 2) + std::pow(c[1] - s[1], 2) +
                                   std::pow(c[2] - s[2], 2));
        const double v = 1.0 - d / s[3];
        acc += v > 0.0 ? v : 0.0;
      }
    }
    t.j2 = acc / (static_cast<double>(L) * static_cast<double>(K));
  }

  for (std::size_t l = 0; l < L; ++l) {
    const double zm = 0.5 * (p[l][2] + p[l + 1][2]);
    double delta;
    if (zm > w.z_max) {
      delta = zm - w.z_max;
    } else if (zm >= w.z_min) {
      delta = 0.0;
    } else if (zm > 0.0) {
      delta = w.z_min - zm;
    } else {
      delta = violation_cost;
      t.grounded = true;
    }
    t.j3 += delta;
  }

  t.total = beta[0] * t.j1 + beta[1] * t.j2 + beta[2] * t.j3 + (t.grounded ? violation_cost : 0.0);
  return t;
}

}  // namespace oracle
