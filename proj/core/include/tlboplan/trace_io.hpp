#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlboplan/optimizer.hpp"

namespace tlboplan {

// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);

// Header: iteration,fes,best_cost,mean_cost. One row per outer iteration.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);
void write_trace_csv(const std::filesystem::path& file, const ConvergenceTrace& trace);
ConvergenceTrace read_trace_csv(std::istream& in);
ConvergenceTrace read_trace_csv(const std::filesystem::path& file);

struct NamedTrace {
  std::string name;     // column label, e.g. "mstlbo_3"
  std::string variant;  // grouping key for median curves
  ConvergenceTrace trace;
};

// Best cost at `fes`: linear between recorded points, held constant outside them.
double best_cost_at(const ConvergenceTrace& trace, double fes);

// Best-cost columns on the union of every trace's recorded FES values.
struct AlignedTable {
  std::vector<std::size_t> fes;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[column][row]
};

// Throws std::invalid_argument on an empty trace set or an empty trace.
AlignedTable align_traces(std::span<const NamedTrace> traces);

// Appends "<variant>_median" for every variant with at least two traces.
void add_variant_medians(AlignedTable& table, std::span<const NamedTrace> traces);

// Median over the traces of one variant at every grid row.
std::vector<double> median_curve(const AlignedTable& table, std::span<const NamedTrace> traces,
                                 const std::string& variant);

// First grid FES where curve <= target, or nullopt.
std::optional<std::size_t> first_fes_reaching(const AlignedTable& table,
                                              std::span<const double> curve, double target);

void write_aligned_csv(std::ostream& out, const AlignedTable& table);
void write_aligned_csv(const std::filesystem::path& file, const AlignedTable& table);

double median(std::vector<double> values);

}  // namespace tlboplan
