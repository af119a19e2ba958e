#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tlboplan/optimizer.hpp"
#include "tlboplan/problem.hpp"

namespace tlboplan {

double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);

struct BenchFunction {
  std::string name;
  std::size_t dimension = 0;
  GeneBounds bounds;
  double optimum = 0.0;  // analytic minimum value
  std::function<double(std::span<const double>)> fn;
};

// "sphere" on [-100, 100]^D or "rastrigin" on [-5.12, 5.12]^D.
// Throws std::invalid_argument for unknown names or D < 2.
BenchFunction make_bench_function(const std::string& name, std::size_t dimension);
std::vector<std::string> bench_function_names();

// Reports the function value as CostBreakdown::total; the path terms stay zero.
class BenchProblem final : public Problem {
 public:
  explicit BenchProblem(BenchFunction function) : function_(std::move(function)) {}

  const GeneBounds& bounds() const override { return function_.bounds; }
  CostBreakdown evaluate(std::span<const double> genes) const override;

  const BenchFunction& function() const { return function_; }

 private:
  BenchFunction function_;
};

RunResult run_benchfn(const BenchFunction& function, const OptimizerConfig& config,
                      const RunOptions& options = {});

}  // namespace tlboplan
