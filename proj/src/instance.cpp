#include "examhh/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "examhh/errors.hpp"
#include "examhh/rng.hpp"

namespace examhh {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A trailing newline produces one empty phantom line.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

template <typename Int>
Int parse_int(std::string_view token, std::string_view what, std::size_t line_no) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string(what) + " line " + std::to_string(line_no) +
                     ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::size_t ConflictMatrix::conflicting_pairs() const noexcept {
  std::size_t pairs = 0;
  for (const auto& row : adjacency_) pairs += row.size();
  return pairs / 2;
}

void ConflictMatrix::index_neighbors() {
  adjacency_.assign(dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::int32_t* row = entries_.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j != i && row[j] > 0) adjacency_[i].push_back({static_cast<int>(j), row[j]});
    }
  }
}

ConflictMatrix build_conflict_matrix(std::span<const std::vector<int>> student_exams,
                                     std::size_t num_exams) {
  ConflictMatrix cm(num_exams);
  for (const auto& exams : student_exams) {
    for (std::size_t a = 0; a < exams.size(); ++a) {
      const auto i = static_cast<std::size_t>(exams[a]);
      cm.entries_[i * num_exams + i] += 1;
      for (std::size_t b = a + 1; b < exams.size(); ++b) {
        const auto j = static_cast<std::size_t>(exams[b]);
        cm.entries_[i * num_exams + j] += 1;
        cm.entries_[j * num_exams + i] += 1;
      }
    }
  }
  cm.index_neighbors();
  return cm;
}

ConflictMatrix conflict_matrix_from_dense(std::vector<std::vector<int>> const& dense) {
  const std::size_t n = dense.size();
  ConflictMatrix cm(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dense[i].size() != n) throw std::invalid_argument("conflict table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[i][j] < 0) throw std::invalid_argument("negative conflict count");
      if (dense[i][j] != dense[j][i]) throw std::invalid_argument("conflict table is not symmetric");
      cm.entries_[i * n + j] = dense[i][j];
    }
  }
  cm.index_neighbors();
  return cm;
}

std::vector<std::string> invariant_violations(const ProblemInstance& inst) {
  std::vector<std::string> problems;
  const std::size_t n = inst.num_exams();
  if (n == 0) problems.emplace_back("no exams");
  if (inst.num_students() == 0) problems.emplace_back("no students");
  if (inst.num_timeslots == 0) problems.emplace_back("no timeslots");

  std::vector<int> counted(n, 0);
  std::vector<std::size_t> seen(n, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < inst.student_exams.size(); ++s) {
    for (int e : inst.student_exams[s]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        problems.push_back("student " + std::to_string(s) + " lists out-of-range exam " +
                           std::to_string(e));
        continue;
      }
      if (seen[e] == s) {
        problems.push_back("student " + std::to_string(s) + " lists exam " + std::to_string(e) +
                           " twice");
      }
      seen[e] = s;
      ++counted[e];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (counted[i] != inst.enrollments[i]) {
      problems.push_back("enrollment of exam " + std::to_string(i) + " is " +
                         std::to_string(inst.enrollments[i]) + " but " +
                         std::to_string(counted[i]) + " students take it");
    }
  }

  const ConflictMatrix& c = inst.conflicts;
  if (c.dim() != n) {
    problems.push_back("conflict matrix has dimension " + std::to_string(c.dim()));
    return problems;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) != inst.enrollments[i]) {
      problems.push_back("conflict diagonal of exam " + std::to_string(i) +
                         " differs from its enrollment");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c(i, j) != c(j, i)) {
        problems.push_back("conflict matrix asymmetric at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      }
      if (c(i, j) > std::min(c(i, i), c(j, j))) {
        problems.push_back("conflict count at (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") exceeds an enrollment");
      }
    }
  }
  return problems;
}

ProblemInstance make_instance(std::string name, std::size_t num_exams,
                              std::vector<std::vector<int>> student_exams,
                              std::size_t num_timeslots,
                              std::optional<std::int64_t> slot_capacity) {
  ProblemInstance inst;
  inst.name = std::move(name);
  inst.num_timeslots = num_timeslots;
  inst.slot_capacity = slot_capacity;
  inst.enrollments.assign(num_exams, 0);
  for (const auto& exams : student_exams) {
    for (int e : exams) {
      if (e < 0 || static_cast<std::size_t>(e) >= num_exams) {
        throw std::invalid_argument("exam index " + std::to_string(e) + " out of range");
      }
      ++inst.enrollments[e];
    }
  }
  inst.student_exams = std::move(student_exams);
  inst.conflicts = build_conflict_matrix(inst.student_exams, num_exams);
  if (auto problems = invariant_violations(inst); !problems.empty()) {
    throw std::invalid_argument("invalid instance: " + problems.front());
  }
  return inst;
}

ProblemInstance parse_toronto(std::string_view crs_text, std::string_view stu_text,
                              std::size_t num_timeslots, std::string name,
                              std::vector<std::string>* warnings) {
  auto warn = [&](std::string message) {
    if (warnings) warnings->push_back(std::move(message));
  };

  std::vector<int> listed_enrollment;
  const auto crs_lines = split_lines(crs_text);
  for (std::size_t l = 0; l < crs_lines.size(); ++l) {
    if (is_blank(crs_lines[l])) continue;
    const auto tokens = split_tokens(crs_lines[l]);
    if (tokens.size() < 2) {
      throw ParseError("crs line " + std::to_string(l + 1) + ": expected 'exam-id enrollment'");
    }
    const auto id = parse_int<long>(tokens[0], "crs", l + 1);
    const auto enrolled = parse_int<int>(tokens[1], "crs", l + 1);
    if (id != static_cast<long>(listed_enrollment.size()) + 1) {
      throw ParseError("crs line " + std::to_string(l + 1) + ": exam id " + std::to_string(id) +
                       " breaks the contiguous 1..n numbering");
    }
    listed_enrollment.push_back(enrolled);
  }
  const std::size_t n = listed_enrollment.size();
  if (n == 0) throw ParseError("crs file lists no exams");
  if (num_timeslots == 0) throw ParseError("number of timeslots must be at least 1");

  std::vector<std::vector<int>> students;
  const auto stu_lines = split_lines(stu_text);
  for (std::size_t l = 0; l < stu_lines.size(); ++l) {
    const auto tokens = split_tokens(stu_lines[l]);
    if (tokens.empty()) {
      warn("stu line " + std::to_string(l + 1) + ": empty student line skipped");
      continue;
    }
    std::vector<int> exams;
    exams.reserve(tokens.size());
    for (auto token : tokens) {
      const auto id = parse_int<long>(token, "stu", l + 1);
      if (id < 1 || static_cast<std::size_t>(id) > n) {
        throw ParseError("stu line " + std::to_string(l + 1) + ": exam id " + std::to_string(id) +
                         " out of range 1.." + std::to_string(n));
      }
      exams.push_back(static_cast<int>(id - 1));
    }
    std::sort(exams.begin(), exams.end());
    if (auto dup = std::unique(exams.begin(), exams.end()); dup != exams.end()) {
      warn("stu line " + std::to_string(l + 1) + ": repeated exam id dropped");
      exams.erase(dup, exams.end());
    }
    students.push_back(std::move(exams));
  }
  if (students.empty()) throw ParseError("stu file lists no students");

  ProblemInstance inst = make_instance(std::move(name), n, std::move(students), num_timeslots);
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.enrollments[i] != listed_enrollment[i]) {
      warn("exam " + exam_label(static_cast<int>(i)) + ": crs enrollment " +
           std::to_string(listed_enrollment[i]) + " but " + std::to_string(inst.enrollments[i]) +
           " students listed");
    }
  }
  return inst;
}

ProblemInstance load_toronto(const std::filesystem::path& crs_path,
                             const std::filesystem::path& stu_path, std::size_t num_timeslots,
                             std::vector<std::string>* warnings) {
  const std::string crs = read_file(crs_path);
  const std::string stu = read_file(stu_path);
  return parse_toronto(crs, stu, num_timeslots, crs_path.stem().string(), warnings);
}

std::string exam_label(int exam) {
  std::ostringstream out;
  out << std::setw(4) << std::setfill('0') << exam + 1;
  return out.str();
}

std::string to_crs_text(const ProblemInstance& inst) {
  std::string text;
  for (std::size_t i = 0; i < inst.num_exams(); ++i) {
    text += exam_label(static_cast<int>(i));
    text += ' ';
    text += std::to_string(inst.enrollments[i]);
    text += '\n';
  }
  return text;
}

std::string to_stu_text(const ProblemInstance& inst) {
  std::string text;
  for (const auto& exams : inst.student_exams) {
    for (std::size_t k = 0; k < exams.size(); ++k) {
      if (k) text += ' ';
      text += exam_label(exams[k]);
    }
    text += '\n';
  }
  return text;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  const auto lines = split_lines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::string_view line = lines[l];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 4 && tokens.size() != 5) {
      throw ParseError("manifest line " + std::to_string(l + 1) +
                       ": expected 'name crs stu k [slot_capacity]'");
    }
    ManifestEntry entry;
    entry.name = std::string(tokens[0]);
    auto resolve = [&](std::string_view p) {
      std::filesystem::path path{std::string(p)};
      return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
    };
    entry.crs = resolve(tokens[1]);
    entry.stu = resolve(tokens[2]);
    entry.num_timeslots = parse_int<std::size_t>(tokens[3], "manifest", l + 1);
    if (entry.num_timeslots == 0) {
      throw ParseError("manifest line " + std::to_string(l + 1) + ": k must be at least 1");
    }
    if (tokens.size() == 5) entry.slot_capacity = parse_int<std::int64_t>(tokens[4], "manifest", l + 1);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path), path.parent_path());
}

ProblemInstance generate_instance(const GeneratorParams& p) {
  if (p.num_exams == 0 || p.num_students == 0 || p.num_timeslots == 0) {
    throw std::invalid_argument("generator counts must be at least 1");
  }
  if (p.min_exams_per_student == 0) {
    throw std::invalid_argument("students must take at least one exam");
  }
  if (p.min_exams_per_student > p.max_exams_per_student) {
    throw std::invalid_argument("exams-per-student range is empty (min > max)");
  }
  if (p.max_exams_per_student > p.num_exams) {
    throw std::invalid_argument("exams-per-student maximum exceeds the number of exams");
  }

  Rng rng(p.seed);
  std::uniform_int_distribution<std::size_t> count_dist(p.min_exams_per_student,
                                                        p.max_exams_per_student);
  std::vector<int> pool(p.num_exams);
  std::iota(pool.begin(), pool.end(), 0);

  std::vector<std::vector<int>> students(p.num_students);
  for (auto& exams : students) {
    const std::size_t count = count_dist(rng);
    // Partial Fisher-Yates over a persistent pool: the first `count` slots
    // form a uniform sample without replacement.
    for (std::size_t j = 0; j < count; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, p.num_exams - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    exams.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(exams.begin(), exams.end());
  }

  std::string name = "gen_n" + std::to_string(p.num_exams) + "_m" + std::to_string(p.num_students) +
                     "_s" + std::to_string(p.seed);
  return make_instance(std::move(name), p.num_exams, std::move(students), p.num_timeslots);
}

InstanceStats instance_stats(const ProblemInstance& inst) {
  InstanceStats stats;
  stats.num_exams = inst.num_exams();
  stats.num_students = inst.num_students();
  stats.num_timeslots = inst.num_timeslots;
  for (const auto& exams : inst.student_exams) stats.registrations += exams.size();
  const std::size_t n = inst.num_exams();
  if (n > 1) {
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    stats.conflict_density = static_cast<double>(inst.conflicts.conflicting_pairs()) / pairs;
  }
  return stats;
}

}  // namespace examhh
