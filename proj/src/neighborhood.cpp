#include "examhh/neighborhood.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace examhh {

namespace {

// Uniform contiguous range [first, last] of length >= 2: choosing two
// distinct endpoints uniformly picks each range with equal probability.
std::pair<int, int> draw_range(std::size_t k, Rng& rng) {
  std::uniform_int_distribution<int> slot(0, static_cast<int>(k) - 1);
  const int a = slot(rng);
  int b = slot(rng);
  while (b == a) b = slot(rng);
  return {std::min(a, b), std::max(a, b)};
}

Move noop_move(HeuristicId kind) {
  Move move;
  move.kind = kind;
  return move;
}

void check_range(const Timetable& tt, int first, int last) {
  if (first < 0 || last >= static_cast<int>(tt.num_slots()) || last <= first) {
    throw std::out_of_range("slot range must satisfy 0 <= first < last < k");
  }
}

}  // namespace

std::string_view heuristic_name(HeuristicId id) {
  switch (id) {
    case HeuristicId::KempeSwap:
      return "ST-KC";
    case HeuristicId::ReassignSeq:
      return "RT";
    case HeuristicId::InvertSeq:
      return "IT";
    case HeuristicId::ShiftSeq:
      return "ST";
  }
  return "?";
}

Move kempe_chain_move(const Timetable& tt, const ProblemInstance& inst, int seed_exam,
                      int other_slot) {
  const int home = tt.slot_of(seed_exam);
  Move move;
  move.kind = HeuristicId::KempeSwap;
  move.first_slot = home;
  move.second_slot = other_slot;
  move.seed_exam = seed_exam;
  if (home == other_slot) return move;

  std::vector<char> in_chain(tt.num_exams(), 0);
  std::vector<int> frontier{seed_exam};
  in_chain[seed_exam] = 1;
  while (!frontier.empty()) {
    const int e = frontier.back();
    frontier.pop_back();
    const int from = tt.slot_of(e);
    move.changes.push_back({e, from == home ? other_slot : home});
    for (const Neighbor& nb : inst.conflicts.neighbors(e)) {
      const int s = tt.slot_of(nb.exam);
      if ((s == home || s == other_slot) && !in_chain[nb.exam]) {
        in_chain[nb.exam] = 1;
        frontier.push_back(nb.exam);
      }
    }
  }
  return move;
}

Move relabel_slots(const Timetable& tt, HeuristicId kind, int first, std::span<const int> targets) {
  const int last = first + static_cast<int>(targets.size()) - 1;
  Move move;
  move.kind = kind;
  move.first_slot = first;
  move.second_slot = last;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int from = first + static_cast<int>(i);
    if (targets[i] == from) continue;
    for (int e : tt.exams_in(from)) move.changes.push_back({e, targets[i]});
  }
  return move;
}

Move invert_range(const Timetable& tt, int first, int last) {
  check_range(tt, first, last);
  std::vector<int> targets(static_cast<std::size_t>(last - first + 1));
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = last - static_cast<int>(i);
  return relabel_slots(tt, HeuristicId::InvertSeq, first, targets);
}

Move shift_range(const Timetable& tt, int first, int last, ShiftDirection direction) {
  check_range(tt, first, last);
  const int len = last - first + 1;
  std::vector<int> targets(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int step = direction == ShiftDirection::Right ? 1 : len - 1;
    targets[i] = first + (i + step) % len;
  }
  return relabel_slots(tt, HeuristicId::ShiftSeq, first, targets);
}

Move kempe_chain_swap(const Timetable& tt, const ProblemInstance& inst, Rng& rng) {
  const std::size_t k = tt.num_slots();
  if (k < 2) return noop_move(HeuristicId::KempeSwap);
  std::uniform_int_distribution<int> slot(0, static_cast<int>(k) - 1);
  for (std::size_t attempt = 0; attempt < k * k; ++attempt) {
    const int t1 = slot(rng);
    int t2 = slot(rng);
    while (t2 == t1) t2 = slot(rng);
    const auto members = tt.exams_in(t1);
    if (members.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    return kempe_chain_move(tt, inst, members[pick(rng)], t2);
  }
  return noop_move(HeuristicId::KempeSwap);
}

Move reassign_sequence(const Timetable& tt, Rng& rng) {
  if (tt.num_slots() < 2) return noop_move(HeuristicId::ReassignSeq);
  const auto [first, last] = draw_range(tt.num_slots(), rng);
  std::vector<int> targets(static_cast<std::size_t>(last - first + 1));
  std::iota(targets.begin(), targets.end(), first);
  std::shuffle(targets.begin(), targets.end(), rng);
  return relabel_slots(tt, HeuristicId::ReassignSeq, first, targets);
}

Move invert_sequence(const Timetable& tt, Rng& rng) {
  if (tt.num_slots() < 2) return noop_move(HeuristicId::InvertSeq);
  const auto [first, last] = draw_range(tt.num_slots(), rng);
  return invert_range(tt, first, last);
}

Move shift_sequence(const Timetable& tt, Rng& rng) {
  if (tt.num_slots() < 2) return noop_move(HeuristicId::ShiftSeq);
  const auto [first, last] = draw_range(tt.num_slots(), rng);
  const auto direction =
      std::bernoulli_distribution(0.5)(rng) ? ShiftDirection::Right : ShiftDirection::Left;
  return shift_range(tt, first, last, direction);
}

Move propose(HeuristicId id, const Timetable& tt, const ProblemInstance& inst, Rng& rng) {
  switch (id) {
    case HeuristicId::KempeSwap:
      return kempe_chain_swap(tt, inst, rng);
    case HeuristicId::ReassignSeq:
      return reassign_sequence(tt, rng);
    case HeuristicId::InvertSeq:
      return invert_sequence(tt, rng);
    case HeuristicId::ShiftSeq:
      return shift_sequence(tt, rng);
  }
  throw std::invalid_argument("unknown heuristic id");
}

}  // namespace examhh
