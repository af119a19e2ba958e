#include "tlboplan/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace tlboplan {

namespace {

constexpr const char* kTraceHeader = "iteration,fes,best_cost,mean_cost";

template <typename T>
T parse_field(const std::string& text, const char* what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::runtime_error(std::string("trace csv: bad ") + what + " '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(line);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& r : trace) {
    out << r.iteration << ',' << r.fes << ',' << format_double(r.best_cost) << ','
        << format_double(r.mean_cost) << '\n';
  }
}

void write_trace_csv(const std::filesystem::path& file, const ConvergenceTrace& trace) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  write_trace_csv(out, trace);
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

ConvergenceTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || chomp(line) != kTraceHeader) {
    throw std::runtime_error("trace csv: missing header");
  }
  ConvergenceTrace trace;
  while (std::getline(in, line)) {
    line = chomp(line);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4) throw std::runtime_error("trace csv: expected 4 columns: " + line);
    trace.push_back({parse_field<std::size_t>(fields[0], "iteration"),
                     parse_field<std::size_t>(fields[1], "fes"),
                     parse_field<double>(fields[2], "best_cost"),
                     parse_field<double>(fields[3], "mean_cost")});
  }
  return trace;
}

ConvergenceTrace read_trace_csv(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  return read_trace_csv(in);
}

double best_cost_at(const ConvergenceTrace& trace, double fes) {
  if (trace.empty()) throw std::invalid_argument("best_cost_at on an empty trace");
  if (fes <= static_cast<double>(trace.front().fes)) return trace.front().best_cost;
  if (fes >= static_cast<double>(trace.back().fes)) return trace.back().best_cost;
  // First record with fes strictly greater than the query.
  const auto hi = std::upper_bound(trace.begin(), trace.end(), fes,
                                   [](double f, const TraceRecord& r) {
                                     return f < static_cast<double>(r.fes);
                                   });
  const auto lo = std::prev(hi);
  const double f0 = static_cast<double>(lo->fes);
  const double f1 = static_cast<double>(hi->fes);
  if (fes == f0) return lo->best_cost;
  const double t = (fes - f0) / (f1 - f0);
  return lo->best_cost + t * (hi->best_cost - lo->best_cost);
}

AlignedTable align_traces(std::span<const NamedTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("no traces to align");
  std::set<std::size_t> grid;
  for (const auto& t : traces) {
    if (t.trace.empty()) throw std::invalid_argument("trace '" + t.name + "' is empty");
    for (const auto& r : t.trace) grid.insert(r.fes);
  }
  AlignedTable table;
  table.fes.assign(grid.begin(), grid.end());
  for (const auto& t : traces) {
    table.columns.push_back(t.name);
    std::vector<double> column;
    column.reserve(table.fes.size());
    for (std::size_t f : table.fes) column.push_back(best_cost_at(t.trace, static_cast<double>(f)));
    table.values.push_back(std::move(column));
  }
  return table;
}

std::vector<double> median_curve(const AlignedTable& table, std::span<const NamedTrace> traces,
                                 const std::string& variant) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < traces.size(); ++c) {
    if (traces[c].variant == variant) cols.push_back(c);
  }
  if (cols.empty()) throw std::invalid_argument("no traces for variant '" + variant + "'");
  std::vector<double> curve(table.fes.size());
  for (std::size_t row = 0; row < table.fes.size(); ++row) {
    std::vector<double> v;
    v.reserve(cols.size());
    for (std::size_t c : cols) v.push_back(table.values[c][row]);
    curve[row] = median(std::move(v));
  }
  return curve;
}

void add_variant_medians(AlignedTable& table, std::span<const NamedTrace> traces) {
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (const auto& t : traces) {
    if (counts[t.variant]++ == 0) order.push_back(t.variant);
  }
  for (const auto& variant : order) {
    if (counts[variant] < 2) continue;
    auto curve = median_curve(table, traces, variant);
    table.columns.push_back(variant + "_median");
    table.values.push_back(std::move(curve));
  }
}

std::optional<std::size_t> first_fes_reaching(const AlignedTable& table,
                                              std::span<const double> curve, double target) {
  for (std::size_t row = 0; row < table.fes.size(); ++row) {
    if (curve[row] <= target) return table.fes[row];
  }
  return std::nullopt;
}

void write_aligned_csv(std::ostream& out, const AlignedTable& table) {
  out << "fes";
  for (const auto& c : table.columns) out << ',' << c;
  out << '\n';
  for (std::size_t row = 0; row < table.fes.size(); ++row) {
    out << table.fes[row];
    for (const auto& column : table.values) out << ',' << format_double(column[row]);
    out << '\n';
  }
}

void write_aligned_csv(const std::filesystem::path& file, const AlignedTable& table) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  write_aligned_csv(out, table);
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace tlboplan
