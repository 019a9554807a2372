#include <sstream>

#include "doctest.h"
#include "examhh/errors.hpp"
#include "examhh/formats.hpp"
#include "support/fixtures.hpp"

using namespace examhh;

TEST_CASE("solution files round-trip") {
  const auto inst = fixtures::figure1_instance();
  const Timetable tt = construct_initial_le(inst);
  const std::string text = solution_text(tt, inst);
  CHECK(text.rfind("0001 ", 0) == 0);
  CHECK(text.find("# cost ") != std::string::npos);
  const auto sol = parse_solution(text, inst);
  CHECK(sol.duplicate_placements == 0);
  CHECK(sol.assignment == std::vector<int>(tt.assignment().begin(), tt.assignment().end()));
}

TEST_CASE("solution parsing flags damage") {
  const auto inst = make_instance("pair", 2, {{0, 1}}, 3);
  const auto dup = parse_solution("0001 0\n0001 1\n0002 2\n", inst);
  CHECK(dup.duplicate_placements == 1);
  CHECK_FALSE(check_feasibility(dup.assignment, inst, dup.duplicate_placements).feasible);
  const auto missing = parse_solution("0001 0\n", inst);
  CHECK(missing.assignment[1] == kUnassigned);
  CHECK(check_feasibility(missing.assignment, inst).hc4_unassigned == 1);
  CHECK_THROWS_AS(parse_solution("0003 0\n", inst), ParseError);
  CHECK_THROWS_AS(parse_solution("0001\n", inst), ParseError);
  CHECK_THROWS_AS(parse_solution("0001 x\n", inst), ParseError);
}

TEST_CASE("run logs round-trip exactly") {
  std::vector<TraceRow> trace(3);
  trace[1].iteration = 1;
  trace[1].current_cost = 0.1 + 0.2;
  trace[1].best_cost = 1.0 / 3.0;
  trace[1].boundary = 199980.00099996667;
  trace[1].heuristic = 2;
  trace[1].accepted = true;
  trace[1].utilities = {30, 31, 29.0, 40};
  trace[1].candidate_cost = 7.1475;
  trace[1].draw = 123456.789;
  trace[2].iteration = 2;
  trace[2].reheated = true;
  const std::string text = run_log_text(trace);
  const auto back = parse_run_log(text);
  REQUIRE(back.size() == 3);
  CHECK(back[1].current_cost == trace[1].current_cost);
  CHECK(back[1].best_cost == trace[1].best_cost);
  CHECK(back[1].boundary == trace[1].boundary);
  CHECK(back[1].heuristic == 2);
  CHECK(back[1].accepted);
  CHECK(back[1].utilities == trace[1].utilities);
  CHECK(back[1].draw == trace[1].draw);
  CHECK_FALSE(back[2].draw.has_value());
  CHECK(back[2].reheated);
  CHECK(run_log_text(back) == text);
  CHECK_THROWS_AS(parse_run_log("nope\n"), ParseError);
}

TEST_CASE("batch outputs") {
  BatchReport report;
  BatchRow ok;
  ok.instance = "i1";
  ok.variant = Variant::EGD;
  ok.ok = true;
  ok.best_cost = 4.5;
  ok.initial_cost = 6.0;
  ok.seed = 9;
  BatchRow ok2 = ok;
  ok2.variant = Variant::FD;
  ok2.best_cost = 4.0;
  BatchRow bad = ok;
  bad.instance = "i2";
  bad.ok = false;
  bad.error = "boom";
  report.rows = {ok, ok2, bad};
  report.cells = summarize(report.rows);

  std::ostringstream csv;
  write_batch_csv(csv, report.rows);
  CHECK(csv.str().find("i1,egd,0,9,ok,4.5,6,0,0\n") != std::string::npos);
  CHECK(csv.str().find("i2,egd,0,9,failed,,,,\n") != std::string::npos);

  const std::string json = batch_summary_json(report);
  CHECK(json.find("\"runs\": 3") != std::string::npos);
  CHECK(json.find("\"error\": \"boom\"") != std::string::npos);

  std::ostringstream table;
  write_comparison_table(table, report.cells, false);
  CHECK(table.str() ==
        "instance,RL-EGD,RL-FD,winner\n"
        "i1,4.5,4,RL-FD\n"
        "i2,,,\n");
}

TEST_CASE("text files") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/file"), FileError);
  CHECK(format_real(0.5) == "0.5");
}
