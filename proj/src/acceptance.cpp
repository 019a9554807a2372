#include "examhh/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace examhh {

namespace {

void decay_linear(AcceptanceState& st) { st.boundary = std::max(0.0, st.boundary - st.decay_rate); }

double halving_rate(double level, std::size_t iterations) {
  return iterations == 0 ? 0.0 : level * 0.5 / static_cast<double>(iterations);
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::GD:
      return "gd";
    case Variant::EGD:
      return "egd";
    case Variant::FD:
      return "fd";
    case Variant::NLGD:
      return "nlgd";
  }
  return "?";
}

std::string_view variant_label(Variant v) {
  switch (v) {
    case Variant::GD:
      return "RL-GD";
    case Variant::EGD:
      return "RL-EGD";
    case Variant::FD:
      return "RL-FD";
    case Variant::NLGD:
      return "RL-NLGD";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::GD, Variant::EGD, Variant::FD, Variant::NLGD}) {
    if (variant_name(v) == name) return v;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected gd, egd, fd or nlgd)");
}

void validate(const AcceptanceConfig& cfg) {
  if (!(cfg.kf >= 0.0 && cfg.kf <= 1.0)) throw std::invalid_argument("kf must lie in [0, 1]");
  if (!(cfg.wait_fraction > 0.0 && cfg.wait_fraction <= 1.0)) {
    throw std::invalid_argument("wait fraction must lie in (0, 1]");
  }
  if (!(cfg.reheat_lift >= 0.0)) throw std::invalid_argument("reheat lift must be non-negative");
  if (!(cfg.b_min <= cfg.b_max)) throw std::invalid_argument("b_min must not exceed b_max");
  if (!(cfg.delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  if (!std::isfinite(cfg.beta)) throw std::invalid_argument("beta must be finite");
}

AcceptanceState init_acceptance(Variant variant, double initial_cost, std::size_t total_iterations,
                                const AcceptanceConfig& cfg) {
  if (total_iterations == 0) throw std::invalid_argument("iteration budget must be positive");
  if (!(initial_cost >= 0.0)) throw std::invalid_argument("initial cost must be non-negative");
  validate(cfg);

  AcceptanceState st;
  st.variant = variant;
  st.boundary = initial_cost;
  st.total_iterations = total_iterations;
  st.kf = cfg.kf;
  st.beta = cfg.beta;
  st.b_min = cfg.b_min;
  st.b_max = cfg.b_max;
  st.delta = cfg.delta;
  st.reheat_lift = cfg.reheat_lift;
  if (variant != Variant::NLGD) st.decay_rate = halving_rate(initial_cost, total_iterations);
  if (variant == Variant::EGD) {
    st.wait = static_cast<std::size_t>(std::ceil(cfg.wait_fraction * static_cast<double>(total_iterations)));
    st.wait = std::max<std::size_t>(st.wait, 1);
  }
  return st;
}

Verdict gd_accept(AcceptanceState& st, double incumbent, double candidate) {
  Verdict v;
  v.accepted = candidate <= incumbent || candidate <= st.boundary;
  decay_linear(st);
  ++st.iterations_done;
  v.boundary_after = st.boundary;
  return v;
}

Verdict egd_accept(AcceptanceState& st, double incumbent, double candidate, double best) {
  Verdict v;
  v.accepted = candidate <= incumbent || candidate <= st.boundary;
  decay_linear(st);
  ++st.iterations_done;

  if (candidate < best) {
    st.stagnation_counter = 0;
  } else {
    ++st.stagnation_counter;
  }
  if (st.stagnation_counter >= st.wait) {
    const double current = v.accepted ? candidate : incumbent;
    st.boundary = std::max(current, st.boundary) * (1.0 + st.reheat_lift);
    const std::size_t remaining =
        st.total_iterations > st.iterations_done ? st.total_iterations - st.iterations_done : 0;
    st.decay_rate = halving_rate(st.boundary, remaining);
    st.stagnation_counter = 0;
    v.reheated = true;
  }
  v.boundary_after = st.boundary;
  return v;
}

Verdict fd_accept(AcceptanceState& st, double incumbent, double candidate) {
  Verdict v;
  // Written as a convex combination so kf = 1 gives exactly B and kf = 0
  // exactly P.
  const double threshold =
      incumbent < st.boundary ? (1.0 - st.kf) * incumbent + st.kf * st.boundary : incumbent;
  v.accepted = candidate <= threshold;
  decay_linear(st);
  ++st.iterations_done;
  v.boundary_after = st.boundary;
  return v;
}

Verdict nlgd_accept(AcceptanceState& st, double incumbent, double candidate, Rng& rng) {
  Verdict v;
  v.accepted = candidate <= incumbent || candidate <= st.boundary;
  if (v.accepted) {
    const double u = std::uniform_real_distribution<double>(st.b_min, st.b_max)(rng);
    st.boundary = st.boundary * std::exp(-st.delta * u) + st.beta;
    v.draw = u;
  }
  ++st.iterations_done;
  v.boundary_after = st.boundary;
  return v;
}

Verdict accept(AcceptanceState& st, double incumbent, double candidate, double best, Rng& rng) {
  switch (st.variant) {
    case Variant::GD:
      return gd_accept(st, incumbent, candidate);
    case Variant::EGD:
      return egd_accept(st, incumbent, candidate, best);
    case Variant::FD:
      return fd_accept(st, incumbent, candidate);
    case Variant::NLGD:
      return nlgd_accept(st, incumbent, candidate, rng);
  }
  throw std::invalid_argument("unknown acceptance variant");
}

}  // namespace examhh
