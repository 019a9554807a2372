#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "examhh/acceptance.hpp"

using namespace examhh;

TEST_CASE("variant names") {
  CHECK(parse_variant("egd") == Variant::EGD);
  CHECK(variant_label(Variant::NLGD) == "RL-NLGD");
  CHECK_THROWS_AS(parse_variant("sa"), std::invalid_argument);
}

TEST_CASE("init_acceptance") {
  const auto gd = init_acceptance(Variant::GD, 100.0, 1000);
  CHECK(gd.boundary == 100.0);
  CHECK(gd.decay_rate == doctest::Approx(0.05).epsilon(1e-15));

  const auto nl = init_acceptance(Variant::NLGD, 100.0, 1000);
  CHECK(nl.boundary == 100.0);
  CHECK(nl.beta == 0.0);
  CHECK(nl.b_min == 100000.0);
  CHECK(nl.b_max == 300000.0);
  CHECK(nl.delta == 5e-10);

  CHECK(init_acceptance(Variant::EGD, 50.0, 1000).wait == 250);
  CHECK(init_acceptance(Variant::EGD, 50.0, 1001).wait == 251);

  auto fd = init_acceptance(Variant::FD, 0.0, 1000);
  CHECK(fd.boundary == 0.0);
  CHECK_FALSE(fd_accept(fd, 0.0, 0.5).accepted);
  CHECK(fd_accept(fd, 0.0, 0.0).accepted);

  CHECK_THROWS_AS(init_acceptance(Variant::GD, 10.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(init_acceptance(Variant::GD, -1.0, 10), std::invalid_argument);
  AcceptanceConfig bad;
  bad.kf = 1.5;
  CHECK_THROWS_AS(init_acceptance(Variant::FD, 10.0, 10, bad), std::invalid_argument);
}

TEST_CASE("gd_accept") {
  auto st = init_acceptance(Variant::GD, 100.0, 1000);
  auto v = gd_accept(st, 90.0, 95.0);
  CHECK(v.accepted);
  CHECK(v.boundary_after == doctest::Approx(99.95));
  CHECK_FALSE(gd_accept(st, 90.0, 101.0).accepted);
  CHECK(gd_accept(st, 90.0, 90.0).accepted);
  CHECK_FALSE(v.reheated);

  auto low = init_acceptance(Variant::GD, 1.0, 1);
  low.decay_rate = 5.0;
  CHECK(gd_accept(low, 1.0, 1.0).boundary_after == 0.0);
}

TEST_CASE("egd reheats after the stagnation window") {
  auto st = init_acceptance(Variant::EGD, 100.0, 1000);
  REQUIRE(st.wait == 250);
  for (int i = 1; i < 250; ++i) REQUIRE_FALSE(egd_accept(st, 90.0, 95.0, 90.0).reheated);
  const auto v = egd_accept(st, 90.0, 95.0, 90.0);
  CHECK(v.reheated);
  CHECK(st.stagnation_counter == 0);

  SUBCASE("lift over the incumbent") {
    auto s = init_acceptance(Variant::EGD, 100.0, 1000);
    s.boundary = 50.0;
    s.stagnation_counter = s.wait - 1;
    s.iterations_done = 599;
    const auto r = egd_accept(s, 80.0, 85.0, 70.0);
    CHECK(r.reheated);
    CHECK(r.boundary_after == doctest::Approx(88.0));
    CHECK(s.decay_rate == doctest::Approx(88.0 * 0.5 / 400.0));
  }
  SUBCASE("a new best resets the counter") {
    auto s = init_acceptance(Variant::EGD, 100.0, 1000);
    for (int i = 0; i < 10; ++i) egd_accept(s, 90.0, 95.0, 90.0);
    CHECK(s.stagnation_counter == 10);
    egd_accept(s, 90.0, 89.0, 90.0);
    CHECK(s.stagnation_counter == 0);
  }
}

TEST_CASE("fd threshold") {
  auto st = init_acceptance(Variant::FD, 100.0, 1000);
  auto probe = [&](double candidate) {
    auto s = st;
    return fd_accept(s, 80.0, candidate).accepted;
  };
  CHECK(probe(89.0));
  CHECK(probe(90.0));
  CHECK_FALSE(probe(91.0));

  // Incumbent above the level: threshold is the incumbent.
  auto s = init_acceptance(Variant::FD, 50.0, 1000);
  CHECK(fd_accept(s, 60.0, 60.0).accepted);
  CHECK_FALSE(fd_accept(s, 60.0, 60.5).accepted);
}

TEST_CASE("fd with kf=1 agrees with gd and kf=0 with hill climbing") {
  Rng rng(4);
  std::uniform_real_distribution<double> cost(0.0, 200.0);
  AcceptanceConfig one;
  one.kf = 1.0;
  AcceptanceConfig zero;
  zero.kf = 0.0;
  auto gd = init_acceptance(Variant::GD, 150.0, 5000);
  auto fd1 = init_acceptance(Variant::FD, 150.0, 5000, one);
  auto fd0 = init_acceptance(Variant::FD, 150.0, 5000, zero);
  for (int i = 0; i < 5000; ++i) {
    const double p = cost(rng), c = cost(rng);
    REQUIRE(gd_accept(gd, p, c).accepted == fd_accept(fd1, p, c).accepted);
    REQUIRE(gd.boundary == fd1.boundary);
    REQUIRE(fd_accept(fd0, p, c).accepted == (c <= p));
  }
}

TEST_CASE("nlgd level update") {
  AcceptanceConfig cfg;
  cfg.b_min = cfg.b_max = 200000.0;
  auto st = init_acceptance(Variant::NLGD, 200000.0, 10, cfg);
  Rng rng(1);
  const auto v = nlgd_accept(st, 250000.0, 1.0, rng);
  REQUIRE(v.accepted);
  REQUIRE(v.draw.has_value());
  CHECK(*v.draw == 200000.0);
  CHECK(std::abs(v.boundary_after - 199980.00099996667) <= 1e-9 * 199980.0);

  SUBCASE("rejection leaves the level alone") {
    auto s = init_acceptance(Variant::NLGD, 10.0, 10);
    const auto r = nlgd_accept(s, 5.0, 11.0, rng);
    CHECK_FALSE(r.accepted);
    CHECK_FALSE(r.draw.has_value());
    CHECK(r.boundary_after == 10.0);
  }
  SUBCASE("delta zero adds beta only") {
    AcceptanceConfig c;
    c.delta = 0.0;
    c.beta = 0.25;
    auto s = init_acceptance(Variant::NLGD, 10.0, 10, c);
    CHECK(nlgd_accept(s, 10.0, 9.0, rng).boundary_after == 10.25);
    c.beta = 0.0;
    auto flat = init_acceptance(Variant::NLGD, 10.0, 10, c);
    CHECK(nlgd_accept(flat, 10.0, 9.0, rng).boundary_after == 10.0);
  }
  SUBCASE("per-step factor lies within the exponent range") {
    auto s = init_acceptance(Variant::NLGD, 1000.0, 10);
    double level = s.boundary;
    for (int i = 0; i < 1000; ++i) {
      const auto r = nlgd_accept(s, 2000.0, 0.0, rng);
      const double factor = r.boundary_after / level;
      REQUIRE(factor >= std::exp(-1.5e-4) * (1 - 1e-15));
      REQUIRE(factor <= std::exp(-0.5e-4) * (1 + 1e-15));
      REQUIRE(r.boundary_after < level);
      REQUIRE(r.boundary_after > 0.0);
      level = r.boundary_after;
    }
  }
}

TEST_CASE("every variant accepts a strict improvement") {
  Rng rng(6);
  for (Variant var : {Variant::GD, Variant::EGD, Variant::FD, Variant::NLGD}) {
    auto st = init_acceptance(var, 10.0, 100);
    st.boundary = 0.0;
    CHECK(accept(st, 10.0, 9.999, 5.0, rng).accepted);
  }
}

TEST_CASE("level is non-increasing between reheats") {
  Rng rng(11);
  std::uniform_real_distribution<double> cost(0.0, 100.0);
  for (Variant var : {Variant::GD, Variant::EGD, Variant::FD}) {
    auto st = init_acceptance(var, 80.0, 2000);
    double level = st.boundary;
    double best = 80.0;
    for (int i = 0; i < 2000; ++i) {
      const double p = cost(rng), c = cost(rng);
      const auto v = accept(st, p, c, best, rng);
      best = std::min(best, c);
      if (!v.reheated) REQUIRE(v.boundary_after <= level);
      REQUIRE(v.boundary_after >= 0.0);
      if (var != Variant::EGD) REQUIRE_FALSE(v.reheated);
      level = v.boundary_after;
    }
  }
}
