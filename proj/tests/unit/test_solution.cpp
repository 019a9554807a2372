#include <algorithm>

#include "doctest.h"
#include "examhh/errors.hpp"
#include "examhh/rng.hpp"
#include "examhh/solution.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace examhh;

namespace {

ProblemInstance pair_instance(std::size_t k) { return make_instance("pair", 2, {{0, 1}}, k); }

}  // namespace

TEST_CASE("proximity weights halve from 16 down to 1") {
  CHECK(proximity_weight(0) == 0);
  CHECK(proximity_weight(1) == 16);
  CHECK(proximity_weight(2) == 8);
  CHECK(proximity_weight(3) == 4);
  CHECK(proximity_weight(4) == 2);
  CHECK(proximity_weight(5) == 1);
  CHECK(proximity_weight(6) == 0);
  CHECK(proximity_weight(-2) == 8);
}

TEST_CASE("evaluate_cost on worked examples") {
  const auto inst = pair_instance(4);
  CHECK(evaluate_cost(std::vector<int>{0, 1}, inst).value() == 16.0);
  CHECK(evaluate_cost(std::vector<int>{0, 2}, inst).value() == 8.0);
  CHECK(evaluate_cost(std::vector<int>{3, 0}, inst).value() == 4.0);

  const auto singles = fixtures::random_instance(6, 10, 1, 1, 3, 5);
  CHECK(evaluate_cost(std::vector<int>{0, 1, 2, 0, 1, 2}, singles).weighted_sum == 0);

  const auto fig = fixtures::figure1_instance();
  const std::vector<int> identity{0, 1, 2, 3, 4, 5, 6};
  const auto cost = evaluate_cost(identity, fig);
  CHECK(cost.weighted_sum == oracle::student_pair_cost(fig.student_exams, identity));
  CHECK(cost.weighted_sum == 140);
  CHECK(cost.value() == 28.0);

  CHECK_THROWS_AS(evaluate_cost(std::vector<int>{0, kUnassigned}, inst), std::invalid_argument);
}

TEST_CASE("evaluate_cost agrees with the student-pair oracle on every small assignment") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto inst = fixtures::random_instance(6, 12, 1, 3, 3, seed);
    oracle::for_each_assignment(6, 3, [&](const std::vector<int>& a) {
      REQUIRE(evaluate_cost(a, inst).weighted_sum == oracle::student_pair_cost(inst.student_exams, a));
    });
  }
}

TEST_CASE("evaluate_cost is invariant under relabelling students") {
  auto inst = fixtures::random_instance(20, 80, 1, 4, 7, 11);
  std::vector<int> slots(20);
  for (int e = 0; e < 20; ++e) slots[e] = (e * 3) % 7;
  const auto before = evaluate_cost(slots, inst);
  auto students = inst.student_exams;
  std::reverse(students.begin(), students.end());
  std::rotate(students.begin(), students.begin() + 13, students.end());
  const auto shuffled = make_instance("x", 20, students, 7);
  CHECK(evaluate_cost(slots, shuffled).weighted_sum == before.weighted_sum);
}

TEST_CASE("delta_cost is exact") {
  const auto inst = fixtures::random_instance(20, 120, 1, 4, 6, 3);
  Rng rng(99);
  std::vector<int> slots(20);
  std::uniform_int_distribution<int> slot(0, 5);
  for (auto& s : slots) s = slot(rng);
  Timetable tt(inst, slots);

  CHECK(delta_cost(tt, inst, {}) == 0);

  std::uniform_int_distribution<int> exam(0, 19);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<SlotChange> changes;
    std::vector<char> used(20, 0);
    const int count = 1 + trial % 5;
    for (int c = 0; c < count; ++c) {
      const int e = exam(rng);
      if (used[e]) continue;
      used[e] = 1;
      changes.push_back({e, slot(rng)});
    }
    std::vector<int> after(tt.assignment().begin(), tt.assignment().end());
    for (auto c : changes) after[c.exam] = c.slot;
    const auto expected = oracle::student_pair_cost(inst.student_exams, after) -
                          oracle::student_pair_cost(inst.student_exams,
                                                    std::vector<int>(tt.assignment().begin(), tt.assignment().end()));
    REQUIRE(delta_cost(tt, inst, changes) == expected);
    tt.apply(inst, changes);
    REQUIRE(tt.cost().weighted_sum == evaluate_cost(tt, inst).weighted_sum);
  }

  CHECK_THROWS_AS(delta_cost(tt, inst, std::vector<SlotChange>{{20, 0}}), std::out_of_range);
  CHECK_THROWS_AS(delta_cost(tt, inst, std::vector<SlotChange>{{0, 6}}), std::out_of_range);
  CHECK_THROWS_AS(delta_cost(tt, inst, std::vector<SlotChange>{{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("moving an isolated exam costs nothing") {
  const auto inst = make_instance("iso", 3, {{0, 1}, {2}}, 4);
  Timetable tt(inst, {0, 1, 3});
  CHECK(delta_cost(tt, inst, std::vector<SlotChange>{{2, 0}}) == 0);
  CHECK(delta_cost(tt, inst, std::vector<SlotChange>{{2, 2}}) == 0);
}

TEST_CASE("Timetable keeps slot membership consistent") {
  const auto inst = fixtures::random_instance(15, 40, 1, 3, 5, 4);
  std::vector<int> slots(15);
  for (int e = 0; e < 15; ++e) slots[e] = e % 5;
  Timetable tt(inst, slots);
  tt.apply(inst, std::vector<SlotChange>{{0, 3}, {5, 3}, {7, 0}});
  std::size_t total = 0;
  for (int s = 0; s < 5; ++s) {
    for (int e : tt.exams_in(s)) CHECK(tt.slot_of(e) == s);
    total += tt.exams_in(s).size();
  }
  CHECK(total == 15);
  CHECK_THROWS_AS(Timetable(inst, std::vector<int>(15, 5)), std::invalid_argument);
  CHECK_THROWS_AS(Timetable(inst, std::vector<int>(14, 0)), std::invalid_argument);
}

TEST_CASE("check_feasibility counts each hard constraint") {
  SUBCASE("two conflicting exams share a slot") {
    const auto inst = pair_instance(2);
    const auto r = check_feasibility(std::vector<int>{1, 1}, inst);
    CHECK(r.hc1_violations == 1);
    CHECK_FALSE(r.feasible);
  }
  SUBCASE("seat capacity") {
    const auto inst = make_instance("cap", 2, [] {
      std::vector<std::vector<int>> s;
      for (int i = 0; i < 6; ++i) s.push_back({0});
      for (int i = 0; i < 6; ++i) s.push_back({1});
      return s;
    }(), 2, 10);
    const auto r = check_feasibility(std::vector<int>{0, 0}, inst);
    CHECK(r.hc2_violations == 1);
    CHECK(r.hc1_violations == 0);
    CHECK_FALSE(r.feasible);
    CHECK(check_feasibility(std::vector<int>{0, 1}, inst).feasible);
  }
  SUBCASE("unassigned, duplicated and out-of-range placements") {
    const auto inst = pair_instance(3);
    const auto missing = check_feasibility(std::vector<int>{0, kUnassigned}, inst);
    CHECK(missing.hc4_unassigned == 1);
    CHECK_FALSE(missing.feasible);
    CHECK_FALSE(check_feasibility(std::vector<int>{0, 2}, inst, 1).hc3_ok);
    CHECK_FALSE(check_feasibility(std::vector<int>{0, 7}, inst).hc3_ok);
    CHECK(check_feasibility(std::vector<int>{0, 2}, inst).feasible);
  }
}

TEST_CASE("largest-enrollment construction") {
  SUBCASE("seven-exam example") {
    const auto inst = fixtures::figure1_instance();
    const Timetable tt = construct_initial_le(inst);
    CHECK(check_feasibility(tt, inst).feasible);
    // Exam 0 is the lowest-index exam of maximum enrollment (3).
    CHECK(tt.slot_of(0) == 0);
    int max_in_first = 0;
    for (int e : tt.exams_in(0)) max_in_first = std::max(max_in_first, inst.enrollments[e]);
    CHECK(max_in_first == 3);
  }
  SUBCASE("clique of five in four slots") {
    const auto inst = make_instance("k5", 5, {{0, 1, 2, 3, 4}}, 4);
    try {
      construct_initial_le(inst);
      FAIL("expected SlotsExhausted");
    } catch (const SlotsExhausted& e) {
      CHECK(e.unplaced() == 1);
    }
  }
  SUBCASE("balance cap is respected") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto inst = fixtures::random_instance(30, 60, 1, 3, 12, seed);
      const std::size_t cap = default_balance_cap(30, 12);
      CHECK(cap == 4);
      const Timetable tt = construct_initial_le(inst, cap);
      CHECK(check_feasibility(tt, inst).feasible);
      for (int s = 0; s < 12; ++s) CHECK(tt.exams_in(s).size() <= cap);
    }
  }
  SUBCASE("seat capacity limits each group") {
    std::vector<std::vector<int>> students;
    for (int e = 0; e < 4; ++e) {
      for (int i = 0; i < 6; ++i) students.push_back({e});
    }
    const auto inst = make_instance("seats", 4, students, 4, 12);
    const Timetable tt = construct_initial_le(inst);
    CHECK(check_feasibility(tt, inst).feasible);
    for (int s = 0; s < 4; ++s) CHECK(tt.exams_in(s).size() <= 2);
  }
  SUBCASE("ties are broken by lower index") {
    const auto inst = make_instance("ties", 3, {{0, 1}, {1, 2}, {0, 2}}, 3);
    const Timetable tt = construct_initial_le(inst);
    CHECK(tt.assignment()[0] == 0);
    CHECK(tt.assignment()[1] == 1);
    CHECK(tt.assignment()[2] == 2);
  }
  SUBCASE("output is always feasible when construction succeeds") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto inst = fixtures::random_instance(40, 100, 1, 4, 6 + seed % 10, seed);
      try {
        const Timetable tt = construct_initial_le(inst);
        CHECK(check_feasibility(tt, inst).feasible);
      } catch (const SlotsExhausted&) {
      }
    }
  }
}
