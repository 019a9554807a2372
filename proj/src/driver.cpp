#include "examhh/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "examhh/errors.hpp"

namespace examhh {

void validate(const RunConfig& cfg) {
  if (cfg.max_iterations == 0) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(cfg.utility.lower <= cfg.utility.upper)) {
    throw std::invalid_argument("utility lower bound exceeds upper bound");
  }
  if (!(cfg.utility.initial_fraction >= 0.0 && cfg.utility.initial_fraction <= 1.0)) {
    throw std::invalid_argument("initial utility fraction must lie in [0, 1]");
  }
  if (cfg.slot_capacity && *cfg.slot_capacity <= 0) {
    throw std::invalid_argument("slot capacity must be positive");
  }
  validate(cfg.acceptance);
}

namespace {

Timetable construct(const ProblemInstance& inst, const RunConfig& cfg, std::size_t& cap_used) {
  if (cfg.balance_cap) {
    cap_used = *cfg.balance_cap;
    return construct_initial_le(inst, cap_used == 0 ? std::nullopt : std::optional(cap_used));
  }
  cap_used = default_balance_cap(inst.num_exams(), inst.num_timeslots);
  try {
    return construct_initial_le(inst, cap_used);
  } catch (const SlotsExhausted&) {
    cap_used = 0;
    return construct_initial_le(inst, std::nullopt);
  }
}

}  // namespace

RunResult run_hh(const ProblemInstance& source, const RunConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  const ProblemInstance* inst = &source;
  ProblemInstance capped;
  if (cfg.slot_capacity && cfg.slot_capacity != source.slot_capacity) {
    capped = source;
    capped.slot_capacity = cfg.slot_capacity;
    inst = &capped;
  }

  RunResult result;
  Timetable current = construct(*inst, cfg, result.balance_cap_used);
  result.initial_cost = current.cost();
  result.best_cost = current.cost();
  result.best_timetable = current;

  Rng rng(cfg.seed);
  UtilityTable utilities = UtilityTable::initial(cfg.utility);
  AcceptanceState acceptance =
      init_acceptance(cfg.variant, current.cost().value(), cfg.max_iterations, cfg.acceptance);
  // Reference cost for the NLGD literal mode; otherwise the incumbent cost.
  double reference_cost = current.cost().value();

  if (cfg.record_trace) {
    result.trace.reserve(cfg.max_iterations + 1);
    TraceRow row;
    row.current_cost = row.best_cost = row.candidate_cost = current.cost().value();
    row.boundary = acceptance.boundary;
    row.utilities = utilities.utilities;
    result.trace.push_back(row);
  }

  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    const auto used_utilities = utilities.utilities;
    const HeuristicId h = select_heuristic(utilities, rng);
    const Move move = propose(h, current, *inst, rng);
    const std::int64_t delta = delta_cost(current, *inst, move.changes);
    const ProximityCost candidate{current.cost().weighted_sum + delta, current.cost().students};
    const bool improved = delta < 0;

    const double incumbent_value =
        cfg.variant == Variant::NLGD && cfg.nlgd_literal_old_cost ? reference_cost : current.cost().value();
    const Verdict verdict =
        accept(acceptance, incumbent_value, candidate.value(), result.best_cost.value(), rng);
    if (verdict.accepted) {
      current.apply(move.changes, delta);
      ++result.accepted_moves;
    }
    reference_cost = cfg.nlgd_literal_old_cost ? candidate.value() : current.cost().value();
    if (verdict.reheated) ++result.reheats;
    utilities = update_utility(utilities, h, improved);

    if (current.cost().weighted_sum < result.best_cost.weighted_sum) {
      result.best_cost = current.cost();
      result.best_timetable = current;
      result.iteration_of_best = it;
    }

    if (cfg.record_trace) {
      TraceRow row;
      row.iteration = it;
      row.current_cost = current.cost().value();
      row.best_cost = result.best_cost.value();
      row.boundary = verdict.boundary_after;
      row.heuristic = static_cast<int>(h);
      row.accepted = verdict.accepted;
      row.reheated = verdict.reheated;
      row.utilities = used_utilities;
      row.candidate_cost = candidate.value();
      row.draw = verdict.draw;
      result.trace.push_back(row);
    }
  }

  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<BatchCell> summarize(std::span<const BatchRow> rows) {
  std::vector<BatchCell> cells;
  std::map<std::pair<std::string, int>, std::size_t> index;
  std::vector<std::vector<const BatchRow*>> members;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.instance, static_cast<int>(row.variant));
    auto [pos, inserted] = index.try_emplace(key, cells.size());
    if (inserted) {
      BatchCell cell;
      cell.instance = row.instance;
      cell.variant = row.variant;
      cells.push_back(cell);
      members.emplace_back();
    }
    members[pos->second].push_back(&row);
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    BatchCell& cell = cells[c];
    std::vector<double> costs;
    double wall = 0.0;
    for (const BatchRow* row : members[c]) {
      if (!row->ok) {
        ++cell.failures;
        continue;
      }
      costs.push_back(row->best_cost);
      wall += row->wall_ms;
    }
    cell.runs = costs.size();
    if (costs.empty()) continue;
    cell.lowest_best_cost = *std::min_element(costs.begin(), costs.end());
    double sum = 0.0;
    for (double x : costs) sum += x;
    cell.mean_best_cost = sum / static_cast<double>(costs.size());
    if (costs.size() > 1) {
      double ss = 0.0;
      for (double x : costs) ss += (x - cell.mean_best_cost) * (x - cell.mean_best_cost);
      cell.stddev_best_cost = std::sqrt(ss / static_cast<double>(costs.size() - 1));
    }
    cell.mean_wall_ms = wall / static_cast<double>(costs.size());
  }
  return cells;
}

BatchReport run_batch(std::span<const ProblemInstance> instances, std::span<const Variant> variants,
                      const RunConfig& base, std::size_t replicates, std::size_t jobs) {
  validate(base);
  BatchReport report;
  for (const auto& inst : instances) {
    for (Variant v : variants) {
      for (std::size_t r = 0; r < replicates; ++r) {
        BatchRow row;
        row.instance = inst.name;
        row.variant = v;
        row.replicate = r;
        row.seed = replicate_seed(base.seed, r);
        report.rows.push_back(row);
      }
    }
  }

  const std::size_t per_instance = variants.size() * replicates;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) {
      BatchRow& row = report.rows[i];
      RunConfig cfg = base;
      cfg.variant = row.variant;
      cfg.seed = row.seed;
      cfg.record_trace = false;
      try {
        const RunResult res = run_hh(instances[i / per_instance], cfg);
        row.ok = true;
        row.best_cost = res.best_cost.value();
        row.best_weighted_sum = res.best_cost.weighted_sum;
        row.initial_cost = res.initial_cost.value();
        row.iterations_to_best = res.iteration_of_best;
        row.wall_ms = res.wall_ms;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(report.rows.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  report.cells = summarize(report.rows);
  return report;
}

}  // namespace examhh
