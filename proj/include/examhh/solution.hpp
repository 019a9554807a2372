#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "examhh/instance.hpp"

namespace examhh {

inline constexpr int kMaxWeightedDistance = 5;

/// Proximity weight for two exams `distance` timeslots apart: 16, 8, 4, 2, 1
/// for distances 1..5 and 0 otherwise. Distance 0 is a hard conflict and is
/// never weighted.
constexpr std::int64_t proximity_weight(int distance) {
  distance = distance < 0 ? -distance : distance;
  if (distance < 1 || distance > kMaxWeightedDistance) return 0;
  return std::int64_t{1} << (kMaxWeightedDistance - distance);
}

/// Exact proximity cost: an integer weighted sum over conflicting pairs and
/// the student count it is averaged over.
struct ProximityCost {
  std::int64_t weighted_sum = 0;
  std::int64_t students = 1;

  double value() const noexcept {
    return static_cast<double>(weighted_sum) / static_cast<double>(students);
  }
};

struct SlotChange {
  int exam;
  int slot;
};

inline constexpr int kUnassigned = -1;

/// Exam-to-timeslot assignment with per-slot membership and a cached cost.
/// Every exam is always assigned to a slot in [0, k).
class Timetable {
 public:
  Timetable() = default;
  /// Throws std::invalid_argument if an exam is unassigned or out of range.
  Timetable(const ProblemInstance& inst, std::vector<int> assignment);

  std::size_t num_exams() const noexcept { return assignment_.size(); }
  std::size_t num_slots() const noexcept { return members_.size(); }
  int slot_of(int exam) const noexcept { return assignment_[exam]; }
  std::span<const int> assignment() const noexcept { return assignment_; }
  std::span<const int> exams_in(int slot) const noexcept { return members_[slot]; }

  ProximityCost cost() const noexcept { return {weighted_sum_, students_}; }

  /// Applies `changes` and adds `delta` (from delta_cost) to the cache.
  void apply(std::span<const SlotChange> changes, std::int64_t delta);
  void apply(const ProblemInstance& inst, std::span<const SlotChange> changes);

 private:
  void move_exam(int exam, int slot);

  std::vector<int> assignment_;
  std::vector<std::vector<int>> members_;
  std::vector<int> position_;
  std::int64_t weighted_sum_ = 0;
  std::int64_t students_ = 1;
};

/// Full recomputation from an assignment. Throws std::invalid_argument if an
/// exam is unassigned.
ProximityCost evaluate_cost(std::span<const int> assignment, const ProblemInstance& inst);
ProximityCost evaluate_cost(const Timetable& tt, const ProblemInstance& inst);

/// Change in the weighted sum caused by `changes`, touching only the
/// neighbourhoods of moved exams. Throws std::out_of_range for a bad exam or
/// slot and std::invalid_argument when an exam appears twice.
std::int64_t delta_cost(const Timetable& tt, const ProblemInstance& inst,
                        std::span<const SlotChange> changes);

struct FeasibilityReport {
  std::size_t hc1_violations = 0;  // conflicting pairs sharing a slot
  std::size_t hc2_violations = 0;  // slots over the seat capacity
  bool hc3_ok = true;              // no exam placed twice or in a slot outside [0, k)
  std::size_t hc4_unassigned = 0;
  bool feasible = true;
};

/// `assignment` may contain kUnassigned; `duplicate_placements` counts
/// exams listed more than once by an external solution file.
FeasibilityReport check_feasibility(std::span<const int> assignment, const ProblemInstance& inst,
                                    std::size_t duplicate_placements = 0);
FeasibilityReport check_feasibility(const Timetable& tt, const ProblemInstance& inst);

/// ceil(n / k) + 1
std::size_t default_balance_cap(std::size_t num_exams, std::size_t num_timeslots);

/// Largest-enrollment construction. Builds one conflict-free group per
/// timeslot: the heaviest unscheduled exam seeds the group, then unscheduled
/// exams are added in descending enrollment (ties by lower index) when they
/// conflict with nothing already in it and fit the seat capacity and
/// `balance_cap`. Throws SlotsExhausted if exams remain after k groups.
Timetable construct_initial_le(const ProblemInstance& inst,
                               std::optional<std::size_t> balance_cap = std::nullopt);

}  // namespace examhh
