#include <doctest.h>

#include <cmath>

#include "tlboplan/bench_functions.hpp"
#include "tlboplan/trace_io.hpp"

using namespace tlboplan;

TEST_CASE("analytic values") {
  CHECK(sphere(std::vector<double>(10, 0.0)) == 0.0);
  CHECK(sphere(std::vector<double>{1, 2, 3}) == 14.0);
  CHECK(rastrigin(std::vector<double>(10, 0.0)) == 0.0);
  // Integer points sit on cos = 1, leaving sum x^2.
  CHECK(rastrigin(std::vector<double>{1, -2}) == doctest::Approx(5.0));
  CHECK(rastrigin(std::vector<double>{0.5}) == doctest::Approx(10.25 + 10.0));
}

TEST_CASE("factory") {
  const auto s = make_bench_function("sphere", 10);
  CHECK(s.dimension == 10);
  CHECK(s.bounds.lower[3] == -100.0);
  CHECK(s.optimum == 0.0);
  const auto r = make_bench_function("rastrigin", 4);
  CHECK(r.bounds.upper[0] == 5.12);
  CHECK_THROWS_AS(make_bench_function("ackley", 10), std::invalid_argument);
  CHECK_THROWS_AS(make_bench_function("sphere", 1), std::invalid_argument);
}

TEST_CASE("origin in the initial population is found immediately") {
  const auto f = make_bench_function("sphere", 10);
  OptimizerConfig config;
  config.variant = Variant::kMstlbo;
  config.population_size = 20;
  config.max_fes = 2000;
  RunOptions options;
  options.seeded_genes = {std::vector<double>(10, 0.0)};
  const auto result = run_benchfn(f, config, options);
  CHECK(result.trace.front().best_cost == 0.0);
  CHECK(result.best.total() == 0.0);
}

TEST_CASE("optimizers beat random search on a short budget") {
  for (const char* name : {"sphere", "rastrigin"}) {
    CAPTURE(name);
    const auto f = make_bench_function(name, 10);
    OptimizerConfig config;
    config.population_size = 30;
    config.max_fes = 5000;
    std::vector<double> ms, rs;
    for (std::uint64_t seed = 0; seed < 7; ++seed) {
      config.seed = seed;
      config.variant = Variant::kMstlbo;
      ms.push_back(run_benchfn(f, config).best.total());
      config.variant = Variant::kRandomSearch;
      rs.push_back(run_benchfn(f, config).best.total());
    }
    CHECK(median(ms) < median(rs));
  }
}
