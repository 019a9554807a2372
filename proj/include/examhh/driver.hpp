#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "examhh/acceptance.hpp"
#include "examhh/instance.hpp"
#include "examhh/neighborhood.hpp"
#include "examhh/selection.hpp"
#include "examhh/solution.hpp"

namespace examhh {

struct RunConfig {
  Variant variant = Variant::EGD;
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 1;
  UtilityBounds utility;
  AcceptanceConfig acceptance;
  // Per-slot exam cap for construction: nullopt uses ceil(n/k)+1, 0 disables.
  std::optional<std::size_t> balance_cap;
  // Overrides the instance's seat capacity when set.
  std::optional<std::int64_t> slot_capacity;
  // Literal reading of the NLGD pseudocode: the reference cost for the next
  // comparison becomes the candidate's cost even when it was rejected.
  bool nlgd_literal_old_cost = false;
  bool record_trace = true;
};

void validate(const RunConfig& cfg);

/// One row per iteration; iteration 0 records the constructed state.
struct TraceRow {
  std::size_t iteration = 0;
  double current_cost = 0.0;
  double best_cost = 0.0;
  double boundary = 0.0;
  int heuristic = -1;  // -1 on row 0
  bool accepted = false;
  bool reheated = false;
  // Utilities the selection step saw.
  std::array<double, kHeuristicCount> utilities{};
  double candidate_cost = 0.0;
  std::optional<double> draw;
};

struct RunResult {
  Timetable best_timetable;
  ProximityCost best_cost;
  ProximityCost initial_cost;
  std::size_t iteration_of_best = 0;
  std::size_t accepted_moves = 0;
  std::size_t reheats = 0;
  // The balance cap actually used by construction (0 = none).
  std::size_t balance_cap_used = 0;
  std::vector<TraceRow> trace;
  double wall_ms = 0.0;
};

/// Construct, then iterate select -> propose -> evaluate -> accept -> adapt
/// for exactly cfg.max_iterations proposals. Returns the best solution seen.
/// If construction under the default balance cap runs out of timeslots it is
/// retried without the cap; an explicit cap is honoured as given and
/// SlotsExhausted propagates.
RunResult run_hh(const ProblemInstance& inst, const RunConfig& cfg);

// --- batches --------------------------------------------------------------

struct BatchRow {
  std::string instance;
  Variant variant = Variant::EGD;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double best_cost = 0.0;
  std::int64_t best_weighted_sum = 0;
  double initial_cost = 0.0;
  std::size_t iterations_to_best = 0;
  double wall_ms = 0.0;
};

struct BatchCell {
  std::string instance;
  Variant variant = Variant::EGD;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double lowest_best_cost = 0.0;
  double mean_best_cost = 0.0;
  double stddev_best_cost = 0.0;  // sample standard deviation, 0 for one run
  double mean_wall_ms = 0.0;
};

struct BatchReport {
  std::vector<BatchRow> rows;    // ordered by instance, variant, replicate
  std::vector<BatchCell> cells;  // ordered by instance, variant
};

/// Runs `replicates` seeded runs of every variant on every instance. The
/// seed of replicate r is replicate_seed(base.seed, r). Up to `jobs` runs
/// execute concurrently; row order does not depend on `jobs`. Failed runs
/// are recorded with ok = false.
BatchReport run_batch(std::span<const ProblemInstance> instances, std::span<const Variant> variants,
                      const RunConfig& base, std::size_t replicates, std::size_t jobs = 1);

std::vector<BatchCell> summarize(std::span<const BatchRow> rows);

}  // namespace examhh
