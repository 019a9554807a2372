#include "examhh/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace examhh {

UtilityTable UtilityTable::initial(const UtilityBounds& bounds) {
  if (!(bounds.lower <= bounds.upper)) throw std::invalid_argument("utility lower bound exceeds upper bound");
  UtilityTable table;
  table.lower_bound = bounds.lower;
  table.upper_bound = bounds.upper;
  table.utilities.fill(std::clamp(bounds.initial_fraction * bounds.upper, bounds.lower, bounds.upper));
  return table;
}

HeuristicId select_heuristic(const UtilityTable& table, Rng& rng) {
  const double best = *std::max_element(table.utilities.begin(), table.utilities.end());
  std::array<std::size_t, kHeuristicCount> tied{};
  std::size_t count = 0;
  for (std::size_t h = 0; h < kHeuristicCount; ++h) {
    if (table.utilities[h] == best) tied[count++] = h;
  }
  if (count == 1) return static_cast<HeuristicId>(tied[0]);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  return static_cast<HeuristicId>(tied[pick(rng)]);
}

UtilityTable update_utility(UtilityTable table, HeuristicId h, bool improved) {
  double& u = table.utilities[static_cast<std::size_t>(h)];
  u = std::clamp(u + (improved ? 1.0 : -1.0), table.lower_bound, table.upper_bound);
  return table;
}

}  // namespace examhh
