// examhh: solve, batch-run, validate, generate and summarise uncapacitated
// exam timetabling instances in the Toronto .crs/.stu format.
//
// Exit codes: 0 success, 1 infeasible solution or runtime failure,
// 2 unreadable/unwritable file, 3 parse, usage or configuration error,
// 4 initial construction ran out of timeslots.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "examhh/driver.hpp"
#include "examhh/errors.hpp"
#include "examhh/formats.hpp"
#include "examhh/instance.hpp"

namespace fs = std::filesystem;
using namespace examhh;

namespace {

enum ExitCode { kOk = 0, kInfeasible = 1, kFileError = 2, kParseError = 3, kSlotsExhausted = 4 };

struct InstanceArgs {
  std::string crs;
  std::string stu;
  std::size_t timeslots = 0;
  std::int64_t slot_capacity = 0;
};

struct SolverArgs {
  std::string variant = "egd";
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  double kf = 0.5;
  double wait_pct = 25.0;
  double beta = 0.0;
  double bmin = 100000.0;
  double bmax = 300000.0;
  double delta = 5e-10;
  double reheat_lift = 0.1;
  double utility_lower = 0.0;
  double utility_upper = 40.0;
  long balance_cap = -1;
  bool nlgd_literal = false;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a, bool with_capacity) {
  cmd->add_option("--crs", a.crs, "Course file (exam-id enrollment per line)")->required();
  cmd->add_option("--stu", a.stu, "Student file (one student's exam ids per line)")->required();
  cmd->add_option("-k,--timeslots", a.timeslots, "Number of timeslots")->required()->check(CLI::PositiveNumber);
  if (with_capacity) {
    cmd->add_option("--slot-capacity", a.slot_capacity, "Seat limit per timeslot (0 = uncapacitated)")
        ->check(CLI::NonNegativeNumber);
  }
}

void add_solver_options(CLI::App* cmd, SolverArgs& s, bool with_variant) {
  if (with_variant) {
    cmd->add_option("--variant", s.variant, "Acceptance criterion")
        ->check(CLI::IsMember({"gd", "egd", "fd", "nlgd"}))
        ->capture_default_str();
  }
  cmd->add_option("--iterations", s.iterations, "Proposals per run [published setting: 1000]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", s.seed, "Random seed (batch: base seed)")->capture_default_str();
  cmd->add_option("--kf", s.kf, "Flex deluge flexibility coefficient [published setting: 0.5]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--wait-pct", s.wait_pct,
                  "Extended deluge reheat wait, percent of iterations [published setting: 25]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 100.0));
  cmd->add_option("--beta", s.beta, "Non-linear deluge additive term beta [published setting: 0.0]")
      ->capture_default_str();
  cmd->add_option("--bmin", s.bmin, "Non-linear deluge draw minimum [published setting: 100000]")
      ->capture_default_str();
  cmd->add_option("--bmax", s.bmax, "Non-linear deluge draw maximum [published setting: 300000]")
      ->capture_default_str();
  cmd->add_option("--delta", s.delta, "Non-linear deluge decay coefficient [published setting: 5e-10]")
      ->capture_default_str();
  cmd->add_option("--reheat-lift", s.reheat_lift, "Extended deluge reheat lift above the incumbent")
      ->capture_default_str();
  cmd->add_option("--utility-lower", s.utility_lower, "Heuristic utility lower bound [published setting: 0.0]")
      ->capture_default_str();
  cmd->add_option("--utility-upper", s.utility_upper,
                  "Heuristic utility upper bound [published setting: 40.0]; utilities start at 0.75x")
      ->capture_default_str();
  cmd->add_option("--balance-cap", s.balance_cap,
                  "Max exams per timeslot during construction (default ceil(n/k)+1, 0 disables)");
  cmd->add_flag("--nlgd-literal", s.nlgd_literal,
                "Non-linear deluge compares against the previous candidate even after a rejection");
}

RunConfig make_config(const SolverArgs& s, const InstanceArgs* inst) {
  RunConfig cfg;
  cfg.variant = parse_variant(s.variant);
  cfg.max_iterations = s.iterations;
  cfg.seed = s.seed;
  cfg.acceptance.kf = s.kf;
  cfg.acceptance.wait_fraction = s.wait_pct / 100.0;
  cfg.acceptance.beta = s.beta;
  cfg.acceptance.b_min = s.bmin;
  cfg.acceptance.b_max = s.bmax;
  cfg.acceptance.delta = s.delta;
  cfg.acceptance.reheat_lift = s.reheat_lift;
  cfg.utility.lower = s.utility_lower;
  cfg.utility.upper = s.utility_upper;
  if (s.balance_cap >= 0) cfg.balance_cap = static_cast<std::size_t>(s.balance_cap);
  if (inst && inst->slot_capacity > 0) cfg.slot_capacity = inst->slot_capacity;
  cfg.nlgd_literal_old_cost = s.nlgd_literal;
  validate(cfg);
  return cfg;
}

ProblemInstance load(const InstanceArgs& a, bool verbose) {
  std::vector<std::string> warnings;
  ProblemInstance inst = load_toronto(a.crs, a.stu, a.timeslots, &warnings);
  if (a.slot_capacity > 0) inst.slot_capacity = a.slot_capacity;
  if (verbose) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  } else if (!warnings.empty()) {
    std::cerr << "warning: " << warnings.size() << " issue(s) while reading " << a.crs
              << " (use -v for details)\n";
  }
  return inst;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw FileError("cannot create directory " + dir.string() + ": " + ec.message());
}

int cmd_solve(const InstanceArgs& ia, const SolverArgs& sa, const std::string& out_dir, bool verbose) {
  const ProblemInstance inst = load(ia, verbose);
  const RunConfig cfg = make_config(sa, &ia);
  const RunResult res = run_hh(inst, cfg);

  ensure_dir(out_dir);
  const std::string stem = inst.name + "_" + std::string(variant_name(cfg.variant)) + "_s" + std::to_string(cfg.seed);
  const fs::path sol_path = fs::path(out_dir) / (stem + ".sol");
  const fs::path log_path = fs::path(out_dir) / (stem + ".csv");
  write_text_file(sol_path, solution_text(res.best_timetable, inst));
  write_text_file(log_path, run_log_text(res.trace));

  const FeasibilityReport report = check_feasibility(res.best_timetable, inst);
  std::printf("%s %s best=%s initial=%s iter_of_best=%zu time_ms=%.1f feasible=%s\n", inst.name.c_str(),
              std::string(variant_label(cfg.variant)).c_str(), format_real(res.best_cost.value()).c_str(),
              format_real(res.initial_cost.value()).c_str(), res.iteration_of_best, res.wall_ms,
              report.feasible ? "yes" : "no");
  if (verbose) std::cerr << "solution: " << sol_path.string() << "\nrun log: " << log_path.string() << '\n';
  return report.feasible ? kOk : kInfeasible;
}

int cmd_batch(const std::string& manifest_path, const std::vector<std::string>& variant_names,
              std::size_t replicates, std::size_t jobs, const SolverArgs& sa, const std::string& out_dir,
              bool verbose) {
  const auto entries = load_manifest(manifest_path);
  if (entries.empty()) throw ParseError("manifest " + manifest_path + " lists no instances");
  std::vector<Variant> variants;
  for (const auto& v : variant_names) variants.push_back(parse_variant(v));
  const RunConfig cfg = make_config(sa, nullptr);

  std::vector<ProblemInstance> loaded;
  std::vector<std::string> load_errors(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    try {
      InstanceArgs ia{e.crs.string(), e.stu.string(), e.num_timeslots, e.slot_capacity.value_or(0)};
      ProblemInstance inst = load(ia, verbose);
      inst.name = e.name;
      loaded.push_back(std::move(inst));
    } catch (const std::exception& ex) {
      load_errors[i] = ex.what();
      std::cerr << "error: " << e.name << ": " << ex.what() << '\n';
    }
  }

  const BatchReport ran = run_batch(loaded, variants, cfg, replicates, jobs);
  BatchReport report;
  std::size_t next_row = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (load_errors[i].empty()) {
      for (std::size_t r = 0; r < variants.size() * replicates; ++r) report.rows.push_back(ran.rows[next_row++]);
      continue;
    }
    for (Variant v : variants) {
      for (std::size_t r = 0; r < replicates; ++r) {
        BatchRow row;
        row.instance = entries[i].name;
        row.variant = v;
        row.replicate = r;
        row.seed = replicate_seed(cfg.seed, r);
        row.error = load_errors[i];
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.cells = summarize(report.rows);

  ensure_dir(out_dir);
  const fs::path dir(out_dir);
  std::ostringstream raw, lowest, average;
  write_batch_csv(raw, report.rows);
  write_comparison_table(lowest, report.cells, false);
  write_comparison_table(average, report.cells, true);
  write_text_file(dir / "batch_runs.csv", raw.str());
  write_text_file(dir / "batch_summary.json", batch_summary_json(report));
  write_text_file(dir / "lowest_best_cost.csv", lowest.str());
  write_text_file(dir / "average_best_cost.csv", average.str());

  std::cout << "lowest best cost\n" << lowest.str() << "\naverage best cost\n" << average.str();
  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += row.ok ? 0 : 1;
  std::cout << "\n" << report.rows.size() << " runs, " << failed << " failed; outputs in " << dir.string() << '\n';
  return kOk;
}

int cmd_validate(const InstanceArgs& ia, const std::string& solution_path, bool verbose) {
  const ProblemInstance inst = load(ia, verbose);
  const SolutionFile sol = parse_solution(read_text_file(solution_path), inst);
  const FeasibilityReport r = check_feasibility(sol.assignment, inst, sol.duplicate_placements);
  std::printf("hc1_conflicting_pairs %zu\nhc2_over_capacity_slots %zu\nhc3_ok %s\nhc4_unassigned %zu\n",
              r.hc1_violations, r.hc2_violations, r.hc3_ok ? "yes" : "no", r.hc4_unassigned);
  if (r.hc3_ok && r.hc4_unassigned == 0) {
    const ProximityCost c = evaluate_cost(sol.assignment, inst);
    std::printf("cost %s\nweighted_sum %lld\nstudents %lld\n", format_real(c.value()).c_str(),
                static_cast<long long>(c.weighted_sum), static_cast<long long>(c.students));
  }
  std::printf("feasible %s\n", r.feasible ? "yes" : "no");
  return r.feasible ? kOk : kInfeasible;
}

int cmd_generate(const GeneratorParams& p, const std::string& out_dir, std::string name) {
  if (p.num_exams == 0) throw std::invalid_argument("--exams must be at least 1");
  const ProblemInstance inst = generate_instance(p);
  if (name.empty()) name = inst.name;
  ensure_dir(out_dir);
  write_text_file(fs::path(out_dir) / (name + ".crs"), to_crs_text(inst));
  write_text_file(fs::path(out_dir) / (name + ".stu"), to_stu_text(inst));
  std::cout << (fs::path(out_dir) / (name + ".crs")).string() << '\n'
            << (fs::path(out_dir) / (name + ".stu")).string() << '\n';
  return kOk;
}

int cmd_stats(const InstanceArgs& ia, bool verbose) {
  const ProblemInstance inst = load(ia, verbose);
  const InstanceStats s = instance_stats(inst);
  std::printf("instance %s\nexams %zu\nstudents %zu\ntimeslots %zu\nregistrations %zu\nconflict_density %s\n",
              inst.name.c_str(), s.num_exams, s.num_students, s.num_timeslots, s.registrations,
              format_real(s.conflict_density).c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Great-deluge hyper-heuristic for uncapacitated exam timetabling"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print parse warnings and output paths");

  InstanceArgs ia;
  SolverArgs sa;
  std::string out_dir = ".";

  auto* solve = app.add_subcommand("solve", "Solve one instance and write a solution file and run log");
  add_instance_options(solve, ia, true);
  add_solver_options(solve, sa, true);
  solve->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  std::string manifest;
  std::vector<std::string> variants{"egd", "fd", "nlgd"};
  std::size_t replicates = 10;
  std::size_t jobs = 1;
  auto* batch = app.add_subcommand("batch", "Run every variant on every manifest instance");
  batch->add_option("--manifest", manifest, "Instance manifest: name crs stu k [slot_capacity]")->required();
  batch->add_option("--variants", variants, "Acceptance criteria to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"gd", "egd", "fd", "nlgd"}))
      ->capture_default_str();
  batch->add_option("--replicates", replicates, "Runs per instance and variant [published setting: 10]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch->add_option("--jobs", jobs, "Concurrent runs")->capture_default_str()->check(CLI::PositiveNumber);
  add_solver_options(batch, sa, false);
  batch->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  std::string solution;
  auto* validate_cmd = app.add_subcommand("validate", "Check a solution file and recompute its cost");
  add_instance_options(validate_cmd, ia, true);
  validate_cmd->add_option("--solution", solution, "Solution file")->required();

  GeneratorParams gp;
  gp.min_exams_per_student = 2;
  gp.max_exams_per_student = 4;
  gp.seed = 1;
  std::string gen_name;
  auto* generate = app.add_subcommand("generate", "Write a random instance as .crs/.stu files");
  generate->add_option("--exams", gp.num_exams, "Number of exams")->required();
  generate->add_option("--students", gp.num_students, "Number of students")->required()->check(CLI::PositiveNumber);
  generate->add_option("--min-per-student", gp.min_exams_per_student, "Fewest exams per student")
      ->capture_default_str();
  generate->add_option("--max-per-student", gp.max_exams_per_student, "Most exams per student")
      ->capture_default_str();
  generate->add_option("-k,--timeslots", gp.num_timeslots, "Number of timeslots")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gp.seed, "Random seed")->capture_default_str();
  generate->add_option("--name", gen_name, "Output file stem");
  generate->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Print instance size and conflict density");
  add_instance_options(stats, ia, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*solve) return cmd_solve(ia, sa, out_dir, verbose);
    if (*batch) return cmd_batch(manifest, variants, replicates, jobs, sa, out_dir, verbose);
    if (*validate_cmd) return cmd_validate(ia, solution, verbose);
    if (*generate) return cmd_generate(gp, out_dir, gen_name);
    if (*stats) return cmd_stats(ia, verbose);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFileError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const SlotsExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSlotsExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  return kOk;
}
