#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "examhh/driver.hpp"
#include "examhh/instance.hpp"
#include "examhh/solution.hpp"

namespace examhh {

// Solution files: one "exam_id slot" line per exam (ids as in the .crs
// file, slots 0-based), followed by a "# cost ..." comment line.

std::string solution_text(const Timetable& tt, const ProblemInstance& inst);

struct SolutionFile {
  std::vector<int> assignment;  // kUnassigned where the file has no line
  std::size_t duplicate_placements = 0;
};

/// Throws ParseError for malformed lines or exam ids the instance lacks.
SolutionFile parse_solution(std::string_view text, const ProblemInstance& inst);

// Run log CSV:
// iteration,current_cost,best_cost,boundary,heuristic,accepted,reheated,
// u0,u1,u2,u3,candidate_cost,draw
// Reals are printed with 17 significant digits so they round-trip exactly.
void write_run_log(std::ostream& out, std::span<const TraceRow> trace);
std::string run_log_text(std::span<const TraceRow> trace);
std::vector<TraceRow> parse_run_log(std::string_view text);

// Batch outputs.
void write_batch_csv(std::ostream& out, std::span<const BatchRow> rows);
std::string batch_summary_json(const BatchReport& report);
/// Instance-by-variant table; `use_mean` selects the mean best cost instead
/// of the lowest best cost.
void write_comparison_table(std::ostream& out, std::span<const BatchCell> cells, bool use_mean);

std::string format_real(double x);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace examhh
