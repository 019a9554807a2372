#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "examhh/rng.hpp"

namespace examhh {

// Great Deluge family of move-acceptance criteria.
enum class Variant : std::uint8_t { GD, EGD, FD, NLGD };

std::string_view variant_name(Variant v);   // "gd", "egd", ...
std::string_view variant_label(Variant v);  // "RL-GD", "RL-EGD", ...
/// Accepts the short lowercase name; throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view name);

struct AcceptanceConfig {
  // FD flexibility coefficient, 0 <= kf <= 1.
  double kf = 0.5;
  // EGD stagnation window as a fraction of the iteration budget.
  double wait_fraction = 0.25;
  // EGD reheat raises the level to (1 + reheat_lift) x max(incumbent, level).
  double reheat_lift = 0.1;
  // NLGD: level <- level * exp(-delta * u) + beta, u ~ U[b_min, b_max].
  double beta = 0.0;
  double b_min = 100000.0;
  double b_max = 300000.0;
  double delta = 5e-10;
};

/// Throws std::invalid_argument for parameters outside their domains.
void validate(const AcceptanceConfig& cfg);

struct AcceptanceState {
  Variant variant = Variant::GD;
  double boundary = 0.0;
  double decay_rate = 0.0;  // GD / EGD / FD, cost units per iteration
  double kf = 0.5;
  double beta = 0.0;
  double b_min = 100000.0;
  double b_max = 300000.0;
  double delta = 5e-10;
  double reheat_lift = 0.1;
  std::size_t wait = 0;  // EGD
  std::size_t stagnation_counter = 0;
  std::size_t total_iterations = 0;
  std::size_t iterations_done = 0;
};

struct Verdict {
  bool accepted = false;
  bool reheated = false;
  double boundary_after = 0.0;
  // NLGD: the draw u used to update the level on this step.
  std::optional<double> draw;
};

/// Level starts at the initial cost. Linear variants decay it by half over
/// `total_iterations`; EGD's wait is ceil(wait_fraction * total_iterations).
/// Throws std::invalid_argument for a zero budget or negative cost.
AcceptanceState init_acceptance(Variant variant, double initial_cost,
                                std::size_t total_iterations, const AcceptanceConfig& cfg = {});

// Each call counts as one iteration. `incumbent` is the cost of the current
// solution and `candidate` the cost of the proposal.

/// Accepts when candidate <= incumbent or candidate <= level, then lowers
/// the level linearly (never below zero).
Verdict gd_accept(AcceptanceState& st, double incumbent, double candidate);

/// GD plus reheating. The stagnation counter resets on a strict new best and
/// otherwise grows; once it reaches `wait` the level is raised and the decay
/// rate recomputed to halve the new level over the remaining iterations.
Verdict egd_accept(AcceptanceState& st, double incumbent, double candidate, double best);

/// Threshold (1 - kf) * P + kf * B when P < B, else P; linear level decay.
Verdict fd_accept(AcceptanceState& st, double incumbent, double candidate);

/// GD test; on acceptance only, level <- level * exp(-delta * u) + beta.
Verdict nlgd_accept(AcceptanceState& st, double incumbent, double candidate, Rng& rng);

/// Dispatches on st.variant.
Verdict accept(AcceptanceState& st, double incumbent, double candidate, double best, Rng& rng);

}  // namespace examhh
