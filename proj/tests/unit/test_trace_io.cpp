#include <doctest.h>

#include <sstream>

#include "tlboplan/random.hpp"
#include "tlboplan/trace_io.hpp"

using namespace tlboplan;

namespace {

ConvergenceTrace random_monotone_trace(Rng& rng, std::size_t rows) {
  ConvergenceTrace t;
  double best = 1e3 * rng.uniform01();
  std::size_t fes = 10 + rng.index(20);
  for (std::size_t i = 0; i < rows; ++i) {
    t.push_back({i, fes, best, best + rng.uniform01() * 1e-3});
    best -= rng.uniform01() * best * 0.1;
    fes += 1 + rng.index(40);
  }
  return t;
}

}  // namespace

TEST_CASE("format_double round trips") {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.uniform01() - 0.5) * std::ldexp(1.0, static_cast<int>(rng.index(200)) - 100);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("trace csv round trip is lossless") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto trace = random_monotone_trace(rng, 1 + rng.index(50));
    std::stringstream ss;
    write_trace_csv(ss, trace);
    CHECK(read_trace_csv(ss) == trace);
  }
}

TEST_CASE("trace csv rejects malformed input") {
  std::stringstream no_header("1,2,3,4\n");
  CHECK_THROWS(read_trace_csv(no_header));
  std::stringstream short_row("iteration,fes,best_cost,mean_cost\n1,2,3\n");
  CHECK_THROWS(read_trace_csv(short_row));
  std::stringstream bad_number("iteration,fes,best_cost,mean_cost\n1,2,x,4\n");
  CHECK_THROWS(read_trace_csv(bad_number));
}

TEST_CASE("interpolation between recorded FES") {
  const ConvergenceTrace t{{0, 10, 8.0, 9.0}, {1, 20, 4.0, 5.0}, {2, 40, 2.0, 3.0}};
  CHECK(best_cost_at(t, 5) == 8.0);
  CHECK(best_cost_at(t, 10) == 8.0);
  CHECK(best_cost_at(t, 15) == 6.0);
  CHECK(best_cost_at(t, 30) == 3.0);
  CHECK(best_cost_at(t, 40) == 2.0);
  CHECK(best_cost_at(t, 99) == 2.0);
}

TEST_CASE("single trace aligns to itself") {
  const ConvergenceTrace t{{0, 10, 8.0, 9.0}, {1, 20, 4.0, 5.0}};
  const std::vector<NamedTrace> one{{"mstlbo_0", "mstlbo", t}};
  const auto table = align_traces(one);
  CHECK(table.fes == std::vector<std::size_t>{10, 20});
  CHECK(table.values[0] == std::vector<double>{8.0, 4.0});
  std::stringstream ss;
  write_aligned_csv(ss, table);
  CHECK(ss.str() == "fes,mstlbo_0\n10,8\n20,4\n");
}

TEST_CASE("traces of different lengths share one grid and stay monotone") {
  Rng rng(5);
  std::vector<NamedTrace> traces{{"tlbo_0", "tlbo", random_monotone_trace(rng, 12)},
                                 {"tlbo_1", "tlbo", random_monotone_trace(rng, 30)},
                                 {"mstlbo_0", "mstlbo", random_monotone_trace(rng, 7)}};
  auto table = align_traces(traces);
  add_variant_medians(table, traces);
  CHECK(table.columns == std::vector<std::string>{"tlbo_0", "tlbo_1", "mstlbo_0", "tlbo_median"});
  for (const auto& column : table.values) {
    REQUIRE(column.size() == table.fes.size());
    for (std::size_t r = 1; r < column.size(); ++r) CHECK(column[r] <= column[r - 1]);
  }
  const auto curve = median_curve(table, traces, "tlbo");
  CHECK(curve == table.values[3]);
  const auto hit = first_fes_reaching(table, curve, curve.back());
  REQUIRE(hit.has_value());
  CHECK(*hit <= table.fes.back());
  CHECK_FALSE(first_fes_reaching(table, curve, -1.0).has_value());
}

TEST_CASE("alignment needs input") {
  CHECK_THROWS_AS(align_traces({}), std::invalid_argument);
  const std::vector<NamedTrace> empty{{"x", "x", {}}};
  CHECK_THROWS_AS(align_traces(empty), std::invalid_argument);
}

TEST_CASE("median") {
  CHECK(median({3.0}) == 3.0);
  CHECK(median({4.0, 1.0, 3.0}) == 3.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK_THROWS(median({}));
}
