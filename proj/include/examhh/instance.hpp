#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace examhh {

struct Neighbor {
  int exam;
  int common_students;
};

/// Symmetric co-enrollment counts. Entry (i, j) is the number of students
/// taking both i and j; the diagonal holds each exam's enrollment.
/// Alongside the dense matrix, each exam keeps the list of exams it shares
/// at least one student with.
class ConflictMatrix {
 public:
  ConflictMatrix() = default;

  std::size_t dim() const noexcept { return dim_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
  std::span<const Neighbor> neighbors(std::size_t exam) const noexcept { return adjacency_[exam]; }

  /// Number of unordered pairs i < j with a non-zero entry.
  std::size_t conflicting_pairs() const noexcept;

  friend ConflictMatrix build_conflict_matrix(std::span<const std::vector<int>> student_exams,
                                              std::size_t num_exams);
  friend ConflictMatrix conflict_matrix_from_dense(std::vector<std::vector<int>> const& dense);

  friend bool operator==(const ConflictMatrix& a, const ConflictMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  explicit ConflictMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}
  void index_neighbors();

  std::size_t dim_ = 0;
  std::vector<std::int32_t> entries_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

ConflictMatrix build_conflict_matrix(std::span<const std::vector<int>> student_exams,
                                     std::size_t num_exams);

/// Builds a matrix directly from a square table. Used to pose small worked
/// examples without a student population; the table must be symmetric.
ConflictMatrix conflict_matrix_from_dense(std::vector<std::vector<int>> const& dense);

struct ProblemInstance {
  std::string name;
  std::size_t num_timeslots = 0;
  std::vector<int> enrollments;
  std::vector<std::vector<int>> student_exams;
  ConflictMatrix conflicts;
  // Seat limit per timeslot; absent means uncapacitated.
  std::optional<std::int64_t> slot_capacity;

  std::size_t num_exams() const noexcept { return enrollments.size(); }
  std::size_t num_students() const noexcept { return student_exams.size(); }
};

/// Assembles an instance from per-student exam lists, deriving enrollments
/// and the conflict matrix. Throws std::invalid_argument when the result
/// would break an instance invariant.
ProblemInstance make_instance(std::string name, std::size_t num_exams,
                              std::vector<std::vector<int>> student_exams,
                              std::size_t num_timeslots,
                              std::optional<std::int64_t> slot_capacity = std::nullopt);

/// Human-readable descriptions of every broken invariant; empty when valid.
std::vector<std::string> invariant_violations(const ProblemInstance& inst);

// --- Toronto benchmark format --------------------------------------------

/// Parses the .crs/.stu pair. Exam ids are 1-based in the files and 0-based
/// internally. Enrollments are recounted from the student file; mismatches
/// with the .crs column, empty student lines and repeated exams on one line
/// are reported through `warnings` when supplied.
ProblemInstance parse_toronto(std::string_view crs_text, std::string_view stu_text,
                              std::size_t num_timeslots, std::string name = {},
                              std::vector<std::string>* warnings = nullptr);

ProblemInstance load_toronto(const std::filesystem::path& crs_path,
                             const std::filesystem::path& stu_path, std::size_t num_timeslots,
                             std::vector<std::string>* warnings = nullptr);

std::string to_crs_text(const ProblemInstance& inst);
std::string to_stu_text(const ProblemInstance& inst);

/// Zero-padded external id ("0001") for internal exam index `exam`.
std::string exam_label(int exam);

// --- batch manifests -----------------------------------------------------

struct ManifestEntry {
  std::string name;
  std::filesystem::path crs;
  std::filesystem::path stu;
  std::size_t num_timeslots = 0;
  std::optional<std::int64_t> slot_capacity;
};

/// One entry per line: `name crs_path stu_path k [slot_capacity]`.
/// Blank lines and '#' comments are ignored; relative paths resolve against
/// `base_dir`.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir = {});
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

// --- generation and summary ----------------------------------------------

struct GeneratorParams {
  std::size_t num_exams = 0;
  std::size_t num_students = 0;
  std::size_t min_exams_per_student = 1;
  std::size_t max_exams_per_student = 1;
  std::size_t num_timeslots = 0;
  std::uint64_t seed = 0;
};

/// Each student draws a uniform count from the inclusive range and then that
/// many distinct exams uniformly at random. Deterministic for a fixed seed.
ProblemInstance generate_instance(const GeneratorParams& params);

struct InstanceStats {
  std::size_t num_exams = 0;
  std::size_t num_students = 0;
  std::size_t num_timeslots = 0;
  std::size_t registrations = 0;
  double conflict_density = 0.0;
};

InstanceStats instance_stats(const ProblemInstance& inst);

}  // namespace examhh
