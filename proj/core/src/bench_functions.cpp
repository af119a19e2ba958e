#include "tlboplan/bench_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tlboplan {

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rastrigin(std::span<const double> x) {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return sum;
}

std::vector<std::string> bench_function_names() { return {"sphere", "rastrigin"}; }

BenchFunction make_bench_function(const std::string& name, std::size_t dimension) {
  if (dimension < 2) throw std::invalid_argument("benchmark dimension must be at least 2");
  BenchFunction f;
  f.name = name;
  f.dimension = dimension;
  double half_width = 0.0;
  if (name == "sphere") {
    half_width = 100.0;
    f.fn = sphere;
  } else if (name == "rastrigin") {
    half_width = 5.12;
    f.fn = rastrigin;
  } else {
    throw std::invalid_argument("unknown benchmark function '" + name + "'");
  }
  f.bounds.lower.assign(dimension, -half_width);
  f.bounds.upper.assign(dimension, half_width);
  f.optimum = 0.0;
  return f;
}

CostBreakdown BenchProblem::evaluate(std::span<const double> genes) const {
  CostBreakdown c;
  c.total = function_.fn(genes);
  return c;
}

RunResult run_benchfn(const BenchFunction& function, const OptimizerConfig& config,
                      const RunOptions& options) {
  const BenchProblem problem(function);
  return run(problem, config, options);
}

}  // namespace tlboplan
