#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tlboplan/cost.hpp"
#include "tlboplan/optimizer.hpp"
#include "tlboplan/scenario.hpp"

namespace tlboplan {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::filesystem::path scenario_path;
  std::vector<Variant> variants;
  std::vector<std::uint64_t> seeds;
  // Seed and variant are overwritten per run.
  OptimizerConfig optimizer;
  CostWeights weights;
  std::filesystem::path output_dir = "out";
  std::size_t workers = 1;
};

// Accepts "0..29" (inclusive), "3", or "1,4,9".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

// Relative scenario paths resolve against base_dir. Throws ConfigError.
RunConfig run_config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& file);

// PLAN_OUT_DIR replaces config.output_dir when set and non-empty.
void apply_env_overrides(RunConfig& config);

struct RunRecord {
  Variant variant = Variant::kMstlbo;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  CostBreakdown cost;
  double wall_seconds = 0.0;
  std::size_t fes = 0;
  std::size_t iterations = 0;

  bool collision_free() const { return ok && cost.j2 == 0.0; }
};

struct VariantStats {
  std::size_t runs = 0;
  std::size_t collision_free = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct RunSummary {
  std::vector<RunRecord> records;
  std::map<std::string, VariantStats> variants;

  bool all_ok() const;
  std::vector<const RunRecord*> failures() const;
};

std::string trace_file_name(Variant variant, std::uint64_t seed);
std::string path_file_name(Variant variant, std::uint64_t seed);

RunSummary summarize(std::vector<RunRecord> records);
nlohmann::json summary_to_json(const RunSummary& summary);
RunSummary summary_from_json(const nlohmann::json& doc);

nlohmann::json path_to_json(Variant variant, std::uint64_t seed, const Candidate& best,
                            const Scenario& scenario);

// One optimizer run per (variant, seed). Writes trace_<variant>_<seed>.csv,
// path_<variant>_<seed>.json and summary.json under output_dir. Per-run
// failures are recorded in the summary; an unusable output directory throws.
RunSummary run_batch(const RunConfig& config);

struct ValidationReport {
  std::size_t traces = 0;
  std::size_t paths = 0;
  bool summary = false;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

// Re-reads every artifact in dir and cross-checks traces, paths and summary.
ValidationReport validate_output_dir(const std::filesystem::path& dir);

}  // namespace tlboplan
