#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "examhh/acceptance.hpp"
#include "examhh/driver.hpp"
#include "examhh/errors.hpp"
#include "examhh/formats.hpp"
#include "examhh/instance.hpp"
#include "examhh/neighborhood.hpp"
#include "examhh/selection.hpp"
#include "examhh/solution.hpp"

namespace py = pybind11;
using namespace examhh;

namespace {

py::dict trace_row_dict(const TraceRow& r) {
  py::dict d;
  d["iteration"] = r.iteration;
  d["current_cost"] = r.current_cost;
  d["best_cost"] = r.best_cost;
  d["boundary"] = r.boundary;
  d["heuristic"] = r.heuristic;
  d["accepted"] = r.accepted;
  d["reheated"] = r.reheated;
  d["utilities"] = r.utilities;
  d["candidate_cost"] = r.candidate_cost;
  d["draw"] = r.draw;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Great-deluge hyper-heuristic for uncapacitated exam timetabling";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FileError>(m, "FileError", PyExc_OSError);
  py::register_exception<SlotsExhausted>(m, "SlotsExhausted", PyExc_RuntimeError);

  py::enum_<Variant>(m, "Variant")
      .value("GD", Variant::GD)
      .value("EGD", Variant::EGD)
      .value("FD", Variant::FD)
      .value("NLGD", Variant::NLGD);
  m.def("parse_variant", &parse_variant, py::arg("name"));

  py::enum_<HeuristicId>(m, "HeuristicId")
      .value("KempeSwap", HeuristicId::KempeSwap)
      .value("ReassignSeq", HeuristicId::ReassignSeq)
      .value("InvertSeq", HeuristicId::InvertSeq)
      .value("ShiftSeq", HeuristicId::ShiftSeq);

  py::class_<ProblemInstance>(m, "ProblemInstance")
      .def_readonly("name", &ProblemInstance::name)
      .def_readonly("num_timeslots", &ProblemInstance::num_timeslots)
      .def_readonly("enrollments", &ProblemInstance::enrollments)
      .def_readonly("student_exams", &ProblemInstance::student_exams)
      .def_readonly("slot_capacity", &ProblemInstance::slot_capacity)
      .def_property_readonly("num_exams", &ProblemInstance::num_exams)
      .def_property_readonly("num_students", &ProblemInstance::num_students)
      .def("conflict", [](const ProblemInstance& p, std::size_t i, std::size_t j) {
        if (i >= p.num_exams() || j >= p.num_exams()) throw py::index_error("exam index out of range");
        return p.conflicts(i, j);
      })
      .def("to_crs", &to_crs_text)
      .def("to_stu", &to_stu_text)
      .def("__repr__", [](const ProblemInstance& p) {
        std::ostringstream out;
        out << "<ProblemInstance " << p.name << " n=" << p.num_exams() << " m=" << p.num_students()
            << " k=" << p.num_timeslots << ">";
        return out.str();
      });

  m.def("make_instance", &make_instance, py::arg("name"), py::arg("num_exams"), py::arg("student_exams"),
        py::arg("num_timeslots"), py::arg("slot_capacity") = std::nullopt);
  m.def(
      "parse_toronto",
      [](const std::string& crs, const std::string& stu, std::size_t k, const std::string& name) {
        std::vector<std::string> warnings;
        ProblemInstance inst = parse_toronto(crs, stu, k, name, &warnings);
        return py::make_tuple(std::move(inst), warnings);
      },
      py::arg("crs_text"), py::arg("stu_text"), py::arg("num_timeslots"), py::arg("name") = "",
      "Returns (instance, warnings).");
  m.def(
      "load_toronto",
      [](const std::filesystem::path& crs, const std::filesystem::path& stu, std::size_t k) {
        return load_toronto(crs, stu, k);
      },
      py::arg("crs_path"), py::arg("stu_path"), py::arg("num_timeslots"));
  m.def("invariant_violations", &invariant_violations);

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("num_exams", &GeneratorParams::num_exams)
      .def_readwrite("num_students", &GeneratorParams::num_students)
      .def_readwrite("min_exams_per_student", &GeneratorParams::min_exams_per_student)
      .def_readwrite("max_exams_per_student", &GeneratorParams::max_exams_per_student)
      .def_readwrite("num_timeslots", &GeneratorParams::num_timeslots)
      .def_readwrite("seed", &GeneratorParams::seed);
  m.def("generate_instance", &generate_instance, py::arg("params"));

  py::class_<InstanceStats>(m, "InstanceStats")
      .def_readonly("num_exams", &InstanceStats::num_exams)
      .def_readonly("num_students", &InstanceStats::num_students)
      .def_readonly("num_timeslots", &InstanceStats::num_timeslots)
      .def_readonly("registrations", &InstanceStats::registrations)
      .def_readonly("conflict_density", &InstanceStats::conflict_density);
  m.def("instance_stats", &instance_stats);

  py::class_<ProximityCost>(m, "ProximityCost")
      .def_readonly("weighted_sum", &ProximityCost::weighted_sum)
      .def_readonly("students", &ProximityCost::students)
      .def_property_readonly("value", &ProximityCost::value);

  py::class_<Timetable>(m, "Timetable")
      .def(py::init<const ProblemInstance&, std::vector<int>>(), py::arg("instance"), py::arg("assignment"))
      .def_property_readonly("assignment",
                             [](const Timetable& t) { return std::vector<int>(t.assignment().begin(), t.assignment().end()); })
      .def_property_readonly("cost", &Timetable::cost)
      .def("exams_in", [](const Timetable& t, int slot) {
        if (slot < 0 || static_cast<std::size_t>(slot) >= t.num_slots()) throw py::index_error("slot out of range");
        auto s = t.exams_in(slot);
        return std::vector<int>(s.begin(), s.end());
      });

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("hc1_violations", &FeasibilityReport::hc1_violations)
      .def_readonly("hc2_violations", &FeasibilityReport::hc2_violations)
      .def_readonly("hc3_ok", &FeasibilityReport::hc3_ok)
      .def_readonly("hc4_unassigned", &FeasibilityReport::hc4_unassigned)
      .def_readonly("feasible", &FeasibilityReport::feasible);

  m.def("evaluate_cost", [](const std::vector<int>& a, const ProblemInstance& p) { return evaluate_cost(a, p); },
        py::arg("assignment"), py::arg("instance"));
  m.def("check_feasibility",
        [](const std::vector<int>& a, const ProblemInstance& p) { return check_feasibility(a, p); },
        py::arg("assignment"), py::arg("instance"));
  m.def("construct_initial_le", &construct_initial_le, py::arg("instance"), py::arg("balance_cap") = std::nullopt);
  m.def("proximity_weight", &proximity_weight);

  py::class_<UtilityTable>(m, "UtilityTable")
      .def_static("initial", [] { return UtilityTable::initial(); })
      .def_readonly("utilities", &UtilityTable::utilities)
      .def_readonly("lower_bound", &UtilityTable::lower_bound)
      .def_readonly("upper_bound", &UtilityTable::upper_bound);
  m.def("update_utility", &update_utility, py::arg("table"), py::arg("heuristic"), py::arg("improved"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("variant", &RunConfig::variant)
      .def_readwrite("max_iterations", &RunConfig::max_iterations)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("balance_cap", &RunConfig::balance_cap)
      .def_readwrite("slot_capacity", &RunConfig::slot_capacity)
      .def_readwrite("nlgd_literal_old_cost", &RunConfig::nlgd_literal_old_cost)
      .def_readwrite("record_trace", &RunConfig::record_trace)
      .def_property(
          "kf", [](const RunConfig& c) { return c.acceptance.kf; }, [](RunConfig& c, double v) { c.acceptance.kf = v; })
      .def_property(
          "wait_fraction", [](const RunConfig& c) { return c.acceptance.wait_fraction; },
          [](RunConfig& c, double v) { c.acceptance.wait_fraction = v; })
      .def_property(
          "reheat_lift", [](const RunConfig& c) { return c.acceptance.reheat_lift; },
          [](RunConfig& c, double v) { c.acceptance.reheat_lift = v; })
      .def_property(
          "beta", [](const RunConfig& c) { return c.acceptance.beta; }, [](RunConfig& c, double v) { c.acceptance.beta = v; })
      .def_property(
          "b_min", [](const RunConfig& c) { return c.acceptance.b_min; },
          [](RunConfig& c, double v) { c.acceptance.b_min = v; })
      .def_property(
          "b_max", [](const RunConfig& c) { return c.acceptance.b_max; },
          [](RunConfig& c, double v) { c.acceptance.b_max = v; })
      .def_property(
          "delta", [](const RunConfig& c) { return c.acceptance.delta; },
          [](RunConfig& c, double v) { c.acceptance.delta = v; })
      .def_property(
          "utility_lower", [](const RunConfig& c) { return c.utility.lower; },
          [](RunConfig& c, double v) { c.utility.lower = v; })
      .def_property(
          "utility_upper", [](const RunConfig& c) { return c.utility.upper; },
          [](RunConfig& c, double v) { c.utility.upper = v; });

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("best_timetable", &RunResult::best_timetable)
      .def_readonly("best_cost", &RunResult::best_cost)
      .def_readonly("initial_cost", &RunResult::initial_cost)
      .def_readonly("iteration_of_best", &RunResult::iteration_of_best)
      .def_readonly("accepted_moves", &RunResult::accepted_moves)
      .def_readonly("reheats", &RunResult::reheats)
      .def_readonly("wall_ms", &RunResult::wall_ms)
      .def_property_readonly("trace",
                             [](const RunResult& r) {
                               py::list rows;
                               for (const auto& row : r.trace) rows.append(trace_row_dict(row));
                               return rows;
                             })
      .def("run_log", [](const RunResult& r) { return run_log_text(r.trace); });

  m.def("run_hh", &run_hh, py::arg("instance"), py::arg("config"), py::call_guard<py::gil_scoped_release>());

  py::class_<BatchCell>(m, "BatchCell")
      .def_readonly("instance", &BatchCell::instance)
      .def_readonly("variant", &BatchCell::variant)
      .def_readonly("runs", &BatchCell::runs)
      .def_readonly("failures", &BatchCell::failures)
      .def_readonly("lowest_best_cost", &BatchCell::lowest_best_cost)
      .def_readonly("mean_best_cost", &BatchCell::mean_best_cost)
      .def_readonly("stddev_best_cost", &BatchCell::stddev_best_cost)
      .def_readonly("mean_wall_ms", &BatchCell::mean_wall_ms);

  py::class_<BatchRow>(m, "BatchRow")
      .def_readonly("instance", &BatchRow::instance)
      .def_readonly("variant", &BatchRow::variant)
      .def_readonly("replicate", &BatchRow::replicate)
      .def_readonly("seed", &BatchRow::seed)
      .def_readonly("ok", &BatchRow::ok)
      .def_readonly("error", &BatchRow::error)
      .def_readonly("best_cost", &BatchRow::best_cost)
      .def_readonly("iterations_to_best", &BatchRow::iterations_to_best)
      .def_readonly("wall_ms", &BatchRow::wall_ms);

  py::class_<BatchReport>(m, "BatchReport")
      .def_readonly("rows", &BatchReport::rows)
      .def_readonly("cells", &BatchReport::cells)
      .def("summary_json", &batch_summary_json);

  m.def(
      "run_batch",
      [](const std::vector<ProblemInstance>& instances, const std::vector<Variant>& variants, const RunConfig& cfg,
         std::size_t replicates, std::size_t jobs) { return run_batch(instances, variants, cfg, replicates, jobs); },
      py::arg("instances"), py::arg("variants"), py::arg("config"), py::arg("replicates") = 10, py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>());
}
