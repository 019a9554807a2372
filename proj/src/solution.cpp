#include "examhh/solution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "examhh/errors.hpp"

namespace examhh {

namespace {

void require_complete(std::span<const int> assignment, const ProblemInstance& inst) {
  if (assignment.size() != inst.num_exams()) {
    throw std::invalid_argument("assignment covers " + std::to_string(assignment.size()) +
                                " exams, instance has " + std::to_string(inst.num_exams()));
  }
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    if (assignment[e] == kUnassigned) {
      throw std::invalid_argument("exam " + exam_label(static_cast<int>(e)) + " is unassigned");
    }
    if (assignment[e] < 0 || static_cast<std::size_t>(assignment[e]) >= inst.num_timeslots) {
      throw std::invalid_argument("exam " + exam_label(static_cast<int>(e)) +
                                  " assigned to nonexistent timeslot " +
                                  std::to_string(assignment[e]));
    }
  }
}

std::int64_t weighted_sum_of(std::span<const int> assignment, const ProblemInstance& inst) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    for (const Neighbor& nb : inst.conflicts.neighbors(i)) {
      if (static_cast<std::size_t>(nb.exam) <= i) continue;
      sum += proximity_weight(assignment[i] - assignment[nb.exam]) * nb.common_students;
    }
  }
  return sum;
}

}  // namespace

Timetable::Timetable(const ProblemInstance& inst, std::vector<int> assignment)
    : assignment_(std::move(assignment)),
      members_(inst.num_timeslots),
      position_(assignment_.size(), 0),
      students_(static_cast<std::int64_t>(inst.num_students())) {
  require_complete(assignment_, inst);
  for (std::size_t e = 0; e < assignment_.size(); ++e) {
    auto& slot = members_[assignment_[e]];
    position_[e] = static_cast<int>(slot.size());
    slot.push_back(static_cast<int>(e));
  }
  weighted_sum_ = weighted_sum_of(assignment_, inst);
}

void Timetable::move_exam(int exam, int slot) {
  const int from = assignment_[exam];
  if (from == slot) return;
  auto& old_members = members_[from];
  const int pos = position_[exam];
  const int last = old_members.back();
  old_members[pos] = last;
  position_[last] = pos;
  old_members.pop_back();

  position_[exam] = static_cast<int>(members_[slot].size());
  members_[slot].push_back(exam);
  assignment_[exam] = slot;
}

void Timetable::apply(std::span<const SlotChange> changes, std::int64_t delta) {
  for (const auto& c : changes) move_exam(c.exam, c.slot);
  weighted_sum_ += delta;
}

void Timetable::apply(const ProblemInstance& inst, std::span<const SlotChange> changes) {
  apply(changes, delta_cost(*this, inst, changes));
}

ProximityCost evaluate_cost(std::span<const int> assignment, const ProblemInstance& inst) {
  require_complete(assignment, inst);
  return {weighted_sum_of(assignment, inst), static_cast<std::int64_t>(inst.num_students())};
}

ProximityCost evaluate_cost(const Timetable& tt, const ProblemInstance& inst) {
  return evaluate_cost(tt.assignment(), inst);
}

std::int64_t delta_cost(const Timetable& tt, const ProblemInstance& inst,
                        std::span<const SlotChange> changes) {
  if (changes.empty()) return 0;
  const std::size_t n = tt.num_exams();
  std::vector<int> target(n, kUnassigned);
  for (const auto& c : changes) {
    if (c.exam < 0 || static_cast<std::size_t>(c.exam) >= n) {
      throw std::out_of_range("move references exam index " + std::to_string(c.exam));
    }
    if (c.slot < 0 || static_cast<std::size_t>(c.slot) >= tt.num_slots()) {
      throw std::out_of_range("move references timeslot " + std::to_string(c.slot));
    }
    if (target[c.exam] != kUnassigned) {
      throw std::invalid_argument("move lists exam " + std::to_string(c.exam) + " twice");
    }
    target[c.exam] = c.slot;
  }

  std::int64_t delta = 0;
  for (const auto& c : changes) {
    const int old_i = tt.slot_of(c.exam);
    const int new_i = c.slot;
    for (const Neighbor& nb : inst.conflicts.neighbors(c.exam)) {
      const int moved_to = target[nb.exam];
      if (moved_to == kUnassigned) {
        const int s = tt.slot_of(nb.exam);
        delta += (proximity_weight(new_i - s) - proximity_weight(old_i - s)) * nb.common_students;
      } else if (c.exam < nb.exam) {
        // Both endpoints move: count the pair once.
        delta += (proximity_weight(new_i - moved_to) - proximity_weight(old_i - tt.slot_of(nb.exam))) *
                 nb.common_students;
      }
    }
  }
  return delta;
}

FeasibilityReport check_feasibility(std::span<const int> assignment, const ProblemInstance& inst,
                                    std::size_t duplicate_placements) {
  FeasibilityReport report;
  const std::size_t n = inst.num_exams();
  const std::size_t k = inst.num_timeslots;
  if (duplicate_placements > 0) report.hc3_ok = false;

  std::vector<std::int64_t> seats(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int slot = i < assignment.size() ? assignment[i] : kUnassigned;
    if (slot == kUnassigned) {
      ++report.hc4_unassigned;
      continue;
    }
    if (slot < 0 || static_cast<std::size_t>(slot) >= k) {
      report.hc3_ok = false;
      continue;
    }
    seats[slot] += inst.enrollments[i];
    for (const Neighbor& nb : inst.conflicts.neighbors(i)) {
      if (static_cast<std::size_t>(nb.exam) > i && static_cast<std::size_t>(nb.exam) < assignment.size() &&
          assignment[nb.exam] == slot) {
        ++report.hc1_violations;
      }
    }
  }
  if (assignment.size() > n) report.hc3_ok = false;
  if (inst.slot_capacity) {
    report.hc2_violations = static_cast<std::size_t>(
        std::count_if(seats.begin(), seats.end(), [&](std::int64_t s) { return s > *inst.slot_capacity; }));
  }
  report.feasible = report.hc1_violations == 0 && report.hc2_violations == 0 && report.hc3_ok &&
                    report.hc4_unassigned == 0;
  return report;
}

FeasibilityReport check_feasibility(const Timetable& tt, const ProblemInstance& inst) {
  return check_feasibility(tt.assignment(), inst);
}

std::size_t default_balance_cap(std::size_t num_exams, std::size_t num_timeslots) {
  if (num_timeslots == 0) return num_exams;
  return (num_exams + num_timeslots - 1) / num_timeslots + 1;
}

Timetable construct_initial_le(const ProblemInstance& inst,
                               std::optional<std::size_t> balance_cap) {
  const std::size_t n = inst.num_exams();
  const std::size_t k = inst.num_timeslots;
  if (balance_cap && *balance_cap == 0) throw std::invalid_argument("balance cap must be positive");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.enrollments[a] > inst.enrollments[b]; });

  std::vector<int> assignment(n, kUnassigned);
  std::vector<int> blocked_in(n, -1);  // slot whose group already holds a neighbour
  std::size_t placed = 0;
  for (std::size_t slot = 0; slot < k && placed < n; ++slot) {
    const int t = static_cast<int>(slot);
    std::size_t group_size = 0;
    std::int64_t group_seats = 0;
    for (int e : order) {
      if (assignment[e] != kUnassigned || blocked_in[e] == t) continue;
      if (balance_cap && group_size >= *balance_cap) break;
      if (inst.slot_capacity && group_seats + inst.enrollments[e] > *inst.slot_capacity) continue;
      assignment[e] = t;
      ++group_size;
      group_seats += inst.enrollments[e];
      ++placed;
      for (const Neighbor& nb : inst.conflicts.neighbors(e)) blocked_in[nb.exam] = t;
    }
  }
  if (placed < n) throw SlotsExhausted(n - placed, k);
  return Timetable(inst, std::move(assignment));
}

}  // namespace examhh
