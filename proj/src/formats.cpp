#include "examhh/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "examhh/errors.hpp"

namespace examhh {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = s.find(sep, start);
    parts.push_back(s.substr(start, end == std::string_view::npos ? s.size() - start : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
  }
  return out;
}

double parse_real(std::string_view token, std::size_t line_no) {
  std::string copy(token);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw ParseError("run log line " + std::to_string(line_no) + ": bad number '" + copy + "'");
  }
  return value;
}

constexpr std::string_view kRunLogHeader =
    "iteration,current_cost,best_cost,boundary,heuristic,accepted,reheated,u0,u1,u2,u3,"
    "candidate_cost,draw";

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string solution_text(const Timetable& tt, const ProblemInstance& inst) {
  std::string text;
  for (std::size_t e = 0; e < tt.num_exams(); ++e) {
    text += exam_label(static_cast<int>(e));
    text += ' ';
    text += std::to_string(tt.slot_of(static_cast<int>(e)));
    text += '\n';
  }
  const ProximityCost c = tt.cost();
  text += "# cost " + format_real(c.value()) + " weighted_sum " + std::to_string(c.weighted_sum) +
          " students " + std::to_string(c.students);
  if (!inst.name.empty()) text += " instance " + inst.name;
  text += '\n';
  return text;
}

SolutionFile parse_solution(std::string_view text, const ProblemInstance& inst) {
  SolutionFile sol;
  sol.assignment.assign(inst.num_exams(), kUnassigned);
  const auto lines = lines_of(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::string_view line = lines[l];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string id_token, slot_token, extra;
    if (!(in >> id_token)) continue;
    if (!(in >> slot_token) || (in >> extra)) {
      throw ParseError("solution line " + std::to_string(l + 1) + ": expected 'exam_id slot'");
    }
    long id = 0;
    int slot = 0;
    auto r1 = std::from_chars(id_token.data(), id_token.data() + id_token.size(), id);
    auto r2 = std::from_chars(slot_token.data(), slot_token.data() + slot_token.size(), slot);
    if (r1.ec != std::errc() || r1.ptr != id_token.data() + id_token.size() || r2.ec != std::errc() ||
        r2.ptr != slot_token.data() + slot_token.size()) {
      throw ParseError("solution line " + std::to_string(l + 1) + ": non-integer token");
    }
    if (id < 1 || static_cast<std::size_t>(id) > inst.num_exams()) {
      throw ParseError("solution line " + std::to_string(l + 1) + ": unknown exam id " + id_token);
    }
    int& assigned = sol.assignment[id - 1];
    if (assigned != kUnassigned) ++sol.duplicate_placements;
    assigned = slot;
  }
  return sol;
}

void write_run_log(std::ostream& out, std::span<const TraceRow> trace) {
  out << kRunLogHeader << '\n';
  for (const TraceRow& r : trace) {
    out << r.iteration << ',' << format_real(r.current_cost) << ',' << format_real(r.best_cost) << ','
        << format_real(r.boundary) << ',' << r.heuristic << ',' << (r.accepted ? 1 : 0) << ','
        << (r.reheated ? 1 : 0);
    for (double u : r.utilities) out << ',' << format_real(u);
    out << ',' << format_real(r.candidate_cost) << ',';
    if (r.draw) out << format_real(*r.draw);
    out << '\n';
  }
}

std::string run_log_text(std::span<const TraceRow> trace) {
  std::ostringstream out;
  write_run_log(out, trace);
  return out.str();
}

std::vector<TraceRow> parse_run_log(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != kRunLogHeader) throw ParseError("run log: missing header");
  std::vector<TraceRow> trace;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    if (lines[l].empty()) continue;
    const auto f = split(lines[l], ',');
    if (f.size() != 13) throw ParseError("run log line " + std::to_string(l + 1) + ": expected 13 fields");
    TraceRow r;
    r.iteration = static_cast<std::size_t>(parse_real(f[0], l + 1));
    r.current_cost = parse_real(f[1], l + 1);
    r.best_cost = parse_real(f[2], l + 1);
    r.boundary = parse_real(f[3], l + 1);
    r.heuristic = static_cast<int>(parse_real(f[4], l + 1));
    r.accepted = f[5] == "1";
    r.reheated = f[6] == "1";
    for (std::size_t h = 0; h < kHeuristicCount; ++h) r.utilities[h] = parse_real(f[7 + h], l + 1);
    r.candidate_cost = parse_real(f[11], l + 1);
    if (!f[12].empty()) r.draw = parse_real(f[12], l + 1);
    trace.push_back(r);
  }
  return trace;
}

void write_batch_csv(std::ostream& out, std::span<const BatchRow> rows) {
  out << "instance,variant,replicate,seed,status,best_cost,initial_cost,iterations_to_best,wall_ms\n";
  for (const BatchRow& r : rows) {
    out << r.instance << ',' << variant_name(r.variant) << ',' << r.replicate << ',' << r.seed << ','
        << (r.ok ? "ok" : "failed") << ',';
    if (r.ok) {
      out << format_real(r.best_cost) << ',' << format_real(r.initial_cost) << ',' << r.iterations_to_best
          << ',' << format_real(r.wall_ms);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

std::string batch_summary_json(const BatchReport& report) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const BatchCell& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["instance"] = c.instance;
    cell["variant"] = std::string(variant_name(c.variant));
    cell["runs"] = c.runs;
    cell["failures"] = c.failures;
    if (c.runs > 0) {
      cell["lowest_best_cost"] = c.lowest_best_cost;
      cell["mean_best_cost"] = c.mean_best_cost;
      cell["stddev_best_cost"] = c.stddev_best_cost;
      cell["mean_wall_ms"] = c.mean_wall_ms;
    }
    cells.push_back(std::move(cell));
  }
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const BatchRow& r : report.rows) {
    if (r.ok) continue;
    failures.push_back({{"instance", r.instance},
                        {"variant", std::string(variant_name(r.variant))},
                        {"replicate", r.replicate},
                        {"error", r.error}});
  }
  nlohmann::ordered_json doc;
  doc["runs"] = report.rows.size();
  doc["cells"] = std::move(cells);
  doc["failed_runs"] = std::move(failures);
  return doc.dump(2) + "\n";
}

void write_comparison_table(std::ostream& out, std::span<const BatchCell> cells, bool use_mean) {
  std::vector<std::string> instances;
  std::vector<Variant> variants;
  std::map<std::pair<std::string, int>, const BatchCell*> lookup;
  for (const BatchCell& c : cells) {
    if (std::find(instances.begin(), instances.end(), c.instance) == instances.end()) {
      instances.push_back(c.instance);
    }
    if (std::find(variants.begin(), variants.end(), c.variant) == variants.end()) variants.push_back(c.variant);
    lookup[{c.instance, static_cast<int>(c.variant)}] = &c;
  }

  out << "instance";
  for (Variant v : variants) out << ',' << variant_label(v);
  out << ",winner\n";
  for (const auto& name : instances) {
    out << name;
    const BatchCell* winner = nullptr;
    for (Variant v : variants) {
      out << ',';
      auto it = lookup.find({name, static_cast<int>(v)});
      if (it == lookup.end() || it->second->runs == 0) continue;
      const BatchCell* c = it->second;
      const double value = use_mean ? c->mean_best_cost : c->lowest_best_cost;
      out << format_real(value);
      const double best = winner ? (use_mean ? winner->mean_best_cost : winner->lowest_best_cost) : 0.0;
      if (!winner || value < best) winner = c;
    }
    out << ',' << (winner ? variant_label(winner->variant) : "") << '\n';
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path.string());
  out << text;
  if (!out) throw FileError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace examhh
