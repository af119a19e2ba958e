// plan: batch runner and artifact tools for the TLBO path planners.
//
//   plan run --config <file>
//   plan bench --fn sphere --dim 10 --variant mstlbo --seeds 0..29
//   plan validate --dir <out>
//   plan export --dir <out> --aligned-csv <file>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlboplan/bench_functions.hpp"
#include "tlboplan/harness.hpp"
#include "tlboplan/trace_io.hpp"

namespace fs = std::filesystem;
using namespace tlboplan;

namespace {

int cmd_run(const std::string& config_file, const std::string& out_dir, std::size_t workers) {
  RunConfig config = load_run_config(config_file);
  apply_env_overrides(config);
  if (!out_dir.empty()) config.output_dir = out_dir;
  if (workers > 0) config.workers = workers;

  const auto summary = run_batch(config);
  for (const auto& [name, s] : summary.variants) {
    std::cout << name << ": runs=" << s.runs << " min=" << s.min << " median=" << s.median
              << " max=" << s.max << " collision_free=" << s.collision_free << "\n";
  }
  std::cout << "artifacts written to " << config.output_dir.string() << "\n";
  const auto failures = summary.failures();
  for (const auto* f : failures) {
    std::cerr << "failed: " << to_string(f->variant) << " seed " << f->seed << ": " << f->error << "\n";
  }
  return failures.empty() ? 0 : 1;
}

int cmd_bench(const std::string& fn, std::size_t dim, const std::string& variant,
              const std::string& seeds_text, std::size_t population, std::size_t max_fes,
              const std::string& trace_dir) {
  const auto function = make_bench_function(fn, dim);
  OptimizerConfig config;
  config.variant = parse_variant(variant);
  config.population_size = population;
  config.max_fes = max_fes;
  config.validate();

  if (!trace_dir.empty()) fs::create_directories(trace_dir);
  std::vector<double> finals;
  for (auto seed : parse_seed_list(seeds_text)) {
    config.seed = seed;
    const auto result = run_benchfn(function, config);
    finals.push_back(result.best.total());
    std::cout << fn << " " << variant << " seed=" << seed << " best=" << format_double(result.best.total())
              << " fes=" << result.fes << "\n";
    if (!trace_dir.empty()) {
      write_trace_csv(fs::path(trace_dir) / trace_file_name(config.variant, seed), result.trace);
    }
  }
  std::cout << "median=" << format_double(median(finals))
            << " min=" << format_double(*std::min_element(finals.begin(), finals.end()))
            << " max=" << format_double(*std::max_element(finals.begin(), finals.end()))
            << " optimum=" << format_double(function.optimum) << "\n";
  return 0;
}

int cmd_validate(const std::string& dir) {
  const auto report = validate_output_dir(dir);
  for (const auto& e : report.errors) std::cerr << "invalid: " << e << "\n";
  std::cout << "traces=" << report.traces << " paths=" << report.paths
            << " summary=" << (report.summary ? "yes" : "no") << " errors=" << report.errors.size()
            << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_export(const std::string& dir, const std::string& out_file) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with("trace_") && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedTrace> traces;
  for (const auto& f : files) {
    NamedTrace t;
    t.name = f.stem().string().substr(6);
    t.variant = t.name.substr(0, t.name.rfind('_'));
    t.trace = read_trace_csv(f);
    traces.push_back(std::move(t));
  }
  auto table = align_traces(traces);
  add_variant_medians(table, traces);
  write_aligned_csv(out_file, table);
  std::cout << "wrote " << table.fes.size() << " rows x " << table.columns.size() << " columns to "
            << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TLBO / MS-TLBO 3D waypoint path planner"};
  app.require_subcommand(1);

  std::string config_file, out_dir;
  std::size_t workers = 0;
  auto* run_cmd = app.add_subcommand("run", "Run every (variant, seed) pair of a run config");
  run_cmd->add_option("--config", config_file, "Run config JSON")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_dir, "Output directory (overrides config and PLAN_OUT_DIR)");
  run_cmd->add_option("--workers", workers, "Parallel runs");

  std::string fn = "sphere", variant = "mstlbo", seeds = "0..29", trace_dir;
  std::size_t dim = 10, population = 30, max_fes = 20000;
  auto* bench_cmd = app.add_subcommand("bench", "Run an optimizer on an analytic benchmark function");
  bench_cmd->add_option("--fn", fn, "sphere | rastrigin")->capture_default_str();
  bench_cmd->add_option("--dim", dim, "Dimension")->capture_default_str();
  bench_cmd->add_option("--variant", variant, "tlbo | mstlbo | random_search")->capture_default_str();
  bench_cmd->add_option("--seeds", seeds, "Seed list, e.g. 0..29 or 1,2,3")->capture_default_str();
  bench_cmd->add_option("--population", population)->capture_default_str();
  bench_cmd->add_option("--max-fes", max_fes)->capture_default_str();
  bench_cmd->add_option("--trace-dir", trace_dir, "Write per-seed trace CSVs here");

  std::string dir;
  auto* validate_cmd = app.add_subcommand("validate", "Re-read and cross-check a run output directory");
  validate_cmd->add_option("--dir", dir, "Output directory")->required();

  std::string export_dir, aligned_csv;
  auto* export_cmd = app.add_subcommand("export", "Write FES-aligned best-cost columns for plotting");
  export_cmd->add_option("--dir", export_dir, "Output directory")->required();
  export_cmd->add_option("--aligned-csv", aligned_csv, "Destination CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(config_file, out_dir, workers);
    if (*bench_cmd) return cmd_bench(fn, dim, variant, seeds, population, max_fes, trace_dir);
    if (*validate_cmd) return cmd_validate(dir);
    if (*export_cmd) return cmd_export(export_dir, aligned_csv);
  } catch (const std::exception& e) {
    std::cerr << "plan: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
