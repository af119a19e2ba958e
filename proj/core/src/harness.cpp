#include "tlboplan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "tlboplan/trace_io.hpp"

namespace tlboplan {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t parse_u64(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad seed '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') throw ConfigError("bad seed '" + text + "'");
  return v;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

template <typename T>
T get_or(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

json cost_to_json(const CostBreakdown& c) {
  return {{"j1", c.j1}, {"j2", c.j2}, {"j3", c.j3}, {"total", c.total}, {"violated", c.violated}};
}

CostBreakdown cost_from_json(const json& j) {
  CostBreakdown c;
  c.j1 = j.at("j1").get<double>();
  c.j2 = j.at("j2").get<double>();
  c.j3 = j.at("j3").get<double>();
  c.total = j.at("total").get<double>();
  c.violated = j.at("violated").get<bool>();
  return c;
}

void write_json(const fs::path& file, const json& doc) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

json read_json(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  return json::parse(in);
}

// "trace_random_search_12.csv" -> "random_search_12".
std::string run_key(const fs::path& file, const std::string& prefix) {
  auto stem = file.stem().string();
  return stem.substr(prefix.size());
}

std::string run_key(Variant variant, std::uint64_t seed) {
  return std::string(to_string(variant)) + "_" + std::to_string(seed);
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ConfigError("empty seed list");
  std::vector<std::uint64_t> seeds;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    const auto first = parse_u64(trim(s.substr(0, dots)));
    const auto last = parse_u64(trim(s.substr(dots + 2)));
    if (last < first) throw ConfigError("seed range '" + s + "' is descending");
    for (auto v = first; v <= last; ++v) seeds.push_back(v);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto part = trim(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    seeds.push_back(parse_u64(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return seeds;
}

RunConfig run_config_from_json(const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("run config must be a JSON object");
  RunConfig config;

  if (!doc.contains("scenario")) throw ConfigError("run config needs 'scenario'");
  fs::path scenario = get_or<std::string>(doc, "scenario", "");
  config.scenario_path = scenario.is_relative() ? base_dir / scenario : scenario;
  if (!fs::exists(config.scenario_path)) {
    throw ConfigError("scenario file not found: " + config.scenario_path.string());
  }

  try {
    if (doc.contains("variants")) {
      for (const auto& v : doc.at("variants")) config.variants.push_back(parse_variant(v.get<std::string>()));
    } else if (doc.contains("variant")) {
      config.variants.push_back(parse_variant(doc.at("variant").get<std::string>()));
    } else {
      config.variants = {Variant::kTlbo, Variant::kMstlbo};
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.variants.empty()) throw ConfigError("'variants' must not be empty");

  if (!doc.contains("seeds")) throw ConfigError("run config needs 'seeds'");
  const auto& seeds = doc.at("seeds");
  if (seeds.is_string()) {
    config.seeds = parse_seed_list(seeds.get<std::string>());
  } else if (seeds.is_array()) {
    for (const auto& s : seeds) {
      if (!s.is_number_integer() || s.get<long long>() < 0) throw ConfigError("seeds must be non-negative integers");
      config.seeds.push_back(s.get<std::uint64_t>());
    }
  } else {
    throw ConfigError("'seeds' must be a list or a range string");
  }
  if (config.seeds.empty()) throw ConfigError("'seeds' must not be empty");

  auto& opt = config.optimizer;
  opt.population_size = get_or<std::size_t>(doc, "population", opt.population_size);
  opt.max_fes = get_or<std::size_t>(doc, "max_fes", opt.max_fes);
  opt.scalar_r = get_or<bool>(doc, "scalar_r", opt.scalar_r);

  if (doc.contains("weights")) {
    const auto& w = doc.at("weights");
    if (w.contains("beta")) {
      const auto beta = w.at("beta").get<std::vector<double>>();
      if (beta.size() != 3) throw ConfigError("weights.beta needs exactly 3 entries");
      std::copy(beta.begin(), beta.end(), config.weights.beta.begin());
    }
    config.weights.violation_cost = get_or<double>(w, "violation_cost", config.weights.violation_cost);
  }

  if (doc.contains("mstlbo")) {
    const auto& m = doc.at("mstlbo");
    try {
      if (m.contains("number_of_subject")) {
        opt.mstlbo.number_of_subject = m.at("number_of_subject").get<std::size_t>();
      }
      if (m.contains("subject_layout")) {
        opt.mstlbo.subject_layout = parse_subject_layout(m.at("subject_layout").get<std::string>());
      }
      if (m.contains("learner_style")) {
        opt.mstlbo.learner_style = parse_learner_style(m.at("learner_style").get<std::string>());
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    opt.mstlbo.mutation_scale = get_or<double>(m, "mutation_scale", opt.mstlbo.mutation_scale);
  }

  config.output_dir = get_or<std::string>(doc, "output_dir", config.output_dir.string());
  config.workers = std::max<std::size_t>(1, get_or<std::size_t>(doc, "workers", config.workers));

  try {
    opt.validate();
    config.weights.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

RunConfig load_run_config(const fs::path& file) {
  json doc;
  try {
    doc = read_json(file);
  } catch (const json::parse_error& e) {
    throw ConfigError(file.string() + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  return run_config_from_json(doc, file.parent_path());
}

void apply_env_overrides(RunConfig& config) {
  if (const char* dir = std::getenv("PLAN_OUT_DIR"); dir != nullptr && *dir != '\0') {
    config.output_dir = dir;
  }
}

bool RunSummary::all_ok() const {
  return std::all_of(records.begin(), records.end(), [](const RunRecord& r) { return r.ok; });
}

std::vector<const RunRecord*> RunSummary::failures() const {
  std::vector<const RunRecord*> out;
  for (const auto& r : records) {
    if (!r.ok) out.push_back(&r);
  }
  return out;
}

std::string trace_file_name(Variant variant, std::uint64_t seed) {
  return "trace_" + run_key(variant, seed) + ".csv";
}

std::string path_file_name(Variant variant, std::uint64_t seed) {
  return "path_" + run_key(variant, seed) + ".json";
}

RunSummary summarize(std::vector<RunRecord> records) {
  RunSummary summary;
  summary.records = std::move(records);
  std::map<std::string, std::vector<double>> totals;
  for (const auto& r : summary.records) {
    if (!r.ok) continue;
    const std::string name(to_string(r.variant));
    totals[name].push_back(r.cost.total);
    if (r.collision_free()) ++summary.variants[name].collision_free;
  }
  for (auto& [name, values] : totals) {
    auto& stats = summary.variants[name];
    stats.runs = values.size();
    stats.min = *std::min_element(values.begin(), values.end());
    stats.max = *std::max_element(values.begin(), values.end());
    stats.median = median(values);
  }
  return summary;
}

json summary_to_json(const RunSummary& summary) {
  json runs = json::array();
  json failures = json::array();
  for (const auto& r : summary.records) {
    json entry = {{"variant", to_string(r.variant)},
                  {"seed", r.seed},
                  {"ok", r.ok},
                  {"wall_time_s", r.wall_seconds},
                  {"fes", r.fes},
                  {"iterations", r.iterations}};
    if (r.ok) {
      entry["cost"] = cost_to_json(r.cost);
      entry["collision_free"] = r.collision_free();
    } else {
      entry["error"] = r.error;
      failures.push_back({{"variant", to_string(r.variant)}, {"seed", r.seed}, {"error", r.error}});
    }
    runs.push_back(std::move(entry));
  }
  json variants = json::object();
  for (const auto& [name, s] : summary.variants) {
    variants[name] = {{"runs", s.runs},
                      {"collision_free", s.collision_free},
                      {"min", s.min},
                      {"median", s.median},
                      {"max", s.max}};
  }
  return {{"runs", runs}, {"variants", variants}, {"failures", failures}};
}

RunSummary summary_from_json(const json& doc) {
  RunSummary summary;
  for (const auto& entry : doc.at("runs")) {
    RunRecord r;
    r.variant = parse_variant(entry.at("variant").get<std::string>());
    r.seed = entry.at("seed").get<std::uint64_t>();
    r.ok = entry.at("ok").get<bool>();
    r.wall_seconds = entry.at("wall_time_s").get<double>();
    r.fes = entry.at("fes").get<std::size_t>();
    r.iterations = entry.at("iterations").get<std::size_t>();
    if (r.ok) {
      r.cost = cost_from_json(entry.at("cost"));
    } else {
      r.error = entry.value("error", "");
    }
    summary.records.push_back(std::move(r));
  }
  for (const auto& [name, s] : doc.at("variants").items()) {
    summary.variants[name] = {s.at("runs").get<std::size_t>(), s.at("collision_free").get<std::size_t>(),
                              s.at("min").get<double>(), s.at("median").get<double>(),
                              s.at("max").get<double>()};
  }
  return summary;
}

json path_to_json(Variant variant, std::uint64_t seed, const Candidate& best,
                  const Scenario& scenario) {
  json waypoints = json::array();
  for (const auto& p : decode(best.genes, scenario)) waypoints.push_back({p.x, p.y, p.z});
  return {{"variant", to_string(variant)},
          {"seed", seed},
          {"genes", best.genes},
          {"waypoints", waypoints},
          {"cost", cost_to_json(best.cost.value())}};
}

RunSummary run_batch(const RunConfig& config) {
  const Scenario scenario = load_scenario(config.scenario_path);
  const PathProblem problem(scenario, config.weights);

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory " + config.output_dir.string() + ": " +
                             ec.message());
  }
  {
    const auto probe = config.output_dir / ".write_probe";
    std::ofstream out(probe);
    if (!out) throw std::runtime_error("output directory is not writable: " + config.output_dir.string());
    out.close();
    fs::remove(probe, ec);
  }

  struct Job {
    Variant variant;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto v : config.variants) {
    for (auto s : config.seeds) jobs.push_back({v, s});
  }
  std::vector<RunRecord> records(jobs.size());

  auto execute = [&](std::size_t index) {
    const auto& job = jobs[index];
    RunRecord& rec = records[index];
    rec.variant = job.variant;
    rec.seed = job.seed;
    try {
      OptimizerConfig oc = config.optimizer;
      oc.variant = job.variant;
      oc.seed = job.seed;
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = run(problem, oc);
      rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      write_trace_csv(config.output_dir / trace_file_name(job.variant, job.seed), result.trace);
      write_json(config.output_dir / path_file_name(job.variant, job.seed),
                 path_to_json(job.variant, job.seed, result.best, scenario));
      rec.cost = result.best.cost.value();
      rec.fes = result.fes;
      rec.iterations = result.iterations;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
  };

  const std::size_t workers = std::min(config.workers, std::max<std::size_t>(1, jobs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) execute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) execute(i);
      });
    }
  }

  auto summary = summarize(std::move(records));
  auto doc = summary_to_json(summary);
  doc["scenario"] = config.scenario_path.string();
  doc["population"] = config.optimizer.population_size;
  doc["max_fes"] = config.optimizer.max_fes;
  write_json(config.output_dir / "summary.json", doc);
  return summary;
}

ValidationReport validate_output_dir(const fs::path& dir) {
  ValidationReport report;
  if (!fs::is_directory(dir)) {
    report.errors.push_back("not a directory: " + dir.string());
    return report;
  }

  std::map<std::string, ConvergenceTrace> traces;
  std::map<std::string, CostBreakdown> paths;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    const auto name = file.filename().string();
    try {
      if (name.starts_with("trace_") && file.extension() == ".csv") {
        auto trace = read_trace_csv(file);
        if (trace.empty()) throw std::runtime_error("no rows");
        for (std::size_t i = 1; i < trace.size(); ++i) {
          if (trace[i].best_cost > trace[i - 1].best_cost) throw std::runtime_error("best_cost increases");
          if (trace[i].fes < trace[i - 1].fes) throw std::runtime_error("fes decreases");
        }
        traces[run_key(file, "trace_")] = std::move(trace);
        ++report.traces;
      } else if (name.starts_with("path_") && file.extension() == ".json") {
        const auto doc = read_json(file);
        parse_variant(doc.at("variant").get<std::string>());
        doc.at("seed").get<std::uint64_t>();
        const auto genes = doc.at("genes").get<std::vector<double>>();
        const auto& waypoints = doc.at("waypoints");
        if (waypoints.size() != genes.size() / 3 + 2 || genes.size() % 3 != 0) {
          throw std::runtime_error("waypoint count does not match genes");
        }
        for (const auto& p : waypoints) {
          if (p.get<std::vector<double>>().size() != 3) throw std::runtime_error("waypoint is not [x,y,z]");
        }
        for (std::size_t w = 0; w < genes.size() / 3; ++w) {
          const auto p = waypoints[w + 1].get<std::vector<double>>();
          if (p[0] != genes[3 * w] || p[1] != genes[3 * w + 1] || p[2] != genes[3 * w + 2]) {
            throw std::runtime_error("waypoints disagree with genes");
          }
        }
        paths[run_key(file, "path_")] = cost_from_json(doc.at("cost"));
        ++report.paths;
      }
    } catch (const std::exception& e) {
      report.errors.push_back(name + ": " + e.what());
    }
  }

  const auto summary_file = dir / "summary.json";
  if (!fs::exists(summary_file)) {
    report.errors.push_back("summary.json missing");
    return report;
  }
  RunSummary summary;
  try {
    summary = summary_from_json(read_json(summary_file));
    report.summary = true;
  } catch (const std::exception& e) {
    report.errors.push_back(std::string("summary.json: ") + e.what());
    return report;
  }

  std::map<std::string, std::vector<double>> finals;
  for (const auto& r : summary.records) {
    if (!r.ok) continue;
    const auto key = run_key(r.variant, r.seed);
    const auto t = traces.find(key);
    const auto p = paths.find(key);
    if (t == traces.end()) {
      report.errors.push_back("missing trace for " + key);
      continue;
    }
    if (p == paths.end()) {
      report.errors.push_back("missing path for " + key);
      continue;
    }
    if (t->second.back().best_cost != r.cost.total) {
      report.errors.push_back("trace final best differs from summary for " + key);
    }
    if (!(p->second == r.cost)) report.errors.push_back("path cost differs from summary for " + key);
    finals[std::string(to_string(r.variant))].push_back(t->second.back().best_cost);
  }
  for (const auto& [name, stats] : summary.variants) {
    const auto f = finals.find(name);
    if (f == finals.end()) {
      report.errors.push_back("no runs for variant " + name);
      continue;
    }
    if (median(f->second) != stats.median) {
      report.errors.push_back("summary median for " + name + " differs from traces");
    }
  }
  return report;
}

}  // namespace tlboplan
