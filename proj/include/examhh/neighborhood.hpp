#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "examhh/instance.hpp"
#include "examhh/rng.hpp"
#include "examhh/solution.hpp"

namespace examhh {

// Improvement heuristics, in registration order.
enum class HeuristicId : std::uint8_t {
  KempeSwap = 0,    // ST-KC: swap a Kempe chain between two timeslots
  ReassignSeq = 1,  // RT: randomly relabel a contiguous run of timeslots
  InvertSeq = 2,    // IT: reverse a contiguous run of timeslots
  ShiftSeq = 3,     // ST: rotate a contiguous run of timeslots by one
};

inline constexpr std::size_t kHeuristicCount = 4;
inline constexpr std::array<HeuristicId, kHeuristicCount> kAllHeuristics = {
    HeuristicId::KempeSwap, HeuristicId::ReassignSeq, HeuristicId::InvertSeq,
    HeuristicId::ShiftSeq};

std::string_view heuristic_name(HeuristicId id);

enum class ShiftDirection : std::uint8_t { Left, Right };

/// A proposed set of slot changes. Feasible timetables stay free of hard
/// conflicts after any Move is applied. An empty change list is a declared
/// no-op.
struct Move {
  HeuristicId kind = HeuristicId::KempeSwap;
  std::vector<SlotChange> changes;
  // Slots (and, for Kempe swaps, the seed exam) that produced the move;
  // -1 when unused.
  int first_slot = -1;
  int second_slot = -1;
  int seed_exam = -1;

  bool is_noop() const noexcept { return changes.empty(); }
};

/// Kempe chain of `seed_exam` between its slot and `other_slot`: the
/// connected component of the seed in the conflict graph restricted to the
/// exams of both slots. The move swaps the chain's two sides.
Move kempe_chain_move(const Timetable& tt, const ProblemInstance& inst, int seed_exam,
                      int other_slot);

/// Relabels slots first..first+targets.size()-1, sending every exam of slot
/// first+i to targets[i]. `targets` must be a permutation of that range.
Move relabel_slots(const Timetable& tt, HeuristicId kind, int first, std::span<const int> targets);

Move invert_range(const Timetable& tt, int first, int last);
Move shift_range(const Timetable& tt, int first, int last, ShiftDirection direction);

// Randomised proposals. Each returns a declared no-op when k < 2.

/// Picks distinct slots t1, t2 and a uniform seed exam in t1. An empty t1
/// is redrawn up to k^2 times before giving up with a no-op.
Move kempe_chain_swap(const Timetable& tt, const ProblemInstance& inst, Rng& rng);
Move reassign_sequence(const Timetable& tt, Rng& rng);
Move invert_sequence(const Timetable& tt, Rng& rng);
Move shift_sequence(const Timetable& tt, Rng& rng);

Move propose(HeuristicId id, const Timetable& tt, const ProblemInstance& inst, Rng& rng);

}  // namespace examhh
