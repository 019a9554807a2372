#pragma once

#include <array>

#include "examhh/neighborhood.hpp"
#include "examhh/rng.hpp"

namespace examhh {

struct UtilityBounds {
  double lower = 0.0;
  double upper = 40.0;
  // Starting utility as a fraction of the upper bound.
  double initial_fraction = 0.75;
};

/// Per-heuristic reinforcement scores, always clipped into
/// [lower_bound, upper_bound].
struct UtilityTable {
  std::array<double, kHeuristicCount> utilities{};
  double lower_bound = 0.0;
  double upper_bound = 40.0;

  static UtilityTable initial(const UtilityBounds& bounds = {});
  double operator[](HeuristicId h) const { return utilities[static_cast<std::size_t>(h)]; }
};

/// Max-utility choice; ties are broken uniformly at random. The rng is only
/// consumed when more than one heuristic shares the maximum.
HeuristicId select_heuristic(const UtilityTable& table, Rng& rng);

/// +1 on improvement, -1 otherwise, then clip.
UtilityTable update_utility(UtilityTable table, HeuristicId h, bool improved);

}  // namespace examhh
