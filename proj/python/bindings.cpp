#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcmax/bench.hpp"
#include "pcmax/formulas.hpp"
#include "pcmax/heuristics.hpp"
#include "pcmax/instance_gen.hpp"
#include "pcmax/instance_io.hpp"
#include "pcmax/lp_battery.hpp"

namespace py = pybind11;
using namespace pcmax;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_string());
}

std::vector<Time> span_to_vector(std::span<const Time> s) { return {s.begin(), s.end()}; }

py::dict bounds_dict(const BoundReport& b) {
  py::dict out;
  out["lb_avg"] = to_fraction(b.lb_avg);
  out["lb_pmax"] = b.lb_pmax;
  out["lb_three_smallest"] = b.lb_three_smallest ? py::cast(*b.lb_three_smallest) : py::none();
  out["lb_best"] = to_fraction(b.lb_best);
  out["lb_integer"] = b.lb_integer();
  py::dict ceilings;
  for (const auto& [name, value] : b.ratio_ceilings) ceilings[py::str(name)] = to_fraction(value);
  out["ratio_ceilings"] = ceilings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Makespan scheduling heuristics, exact solver and LP verification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init<int, std::vector<Time>>(), py::arg("machines"), py::arg("times"))
      .def_property_readonly("machines", &Instance::machines)
      .def_property_readonly("times", [](const Instance& i) { return span_to_vector(i.times()); },
                             "Processing times in non-increasing order")
      .def("original_index", &Instance::original_index)
      .def("__len__", &Instance::size)
      .def_property_readonly("total", &Instance::total)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "Instance(machines=" + std::to_string(i.machines()) + ", n=" + std::to_string(i.size()) + ")";
      });

  py::class_<Schedule>(m, "Schedule")
      .def_property_readonly("assignment", &Schedule::assignment)
      .def_property_readonly("loads", [](const Schedule& s) { return span_to_vector(s.loads()); })
      .def_property_readonly("makespan", &Schedule::makespan)
      .def_property_readonly("critical_machine", &Schedule::critical_machine)
      .def_property_readonly("critical_job", &Schedule::critical_job)
      .def_property_readonly("critical_pos", &Schedule::critical_pos)
      .def("machine_of", &Schedule::machine_of)
      .def("__repr__", [](const Schedule& s) { return "Schedule(makespan=" + std::to_string(s.makespan()) + ")"; });

  m.def("evaluate", &evaluate, py::arg("instance"), py::arg("assignment"));
  m.def("lower_bounds", [](const Instance& i) { return bounds_dict(lower_bounds(i)); });

  m.def("lpt", &lpt);
  m.def("lpt_rev", [](const Instance& i) {
    LptRevResult r = lpt_rev(i);
    return py::make_tuple(std::move(r.schedule), r.z1, r.z2, r.z3);
  }, "Returns (schedule, z1, z2, z3)");
  m.def("slack", &slack_heuristic);
  m.def("multifit", &multifit, py::arg("instance"), py::arg("iterations") = kDefaultMultifitIterations);
  m.def("combine", &combine, py::arg("instance"), py::arg("iterations") = kDefaultMultifitIterations);
  m.def("exact_opt", [](const Instance& i, std::uint64_t node_limit) {
    ExactResult r = exact_opt(i, node_limit);
    py::dict out;
    out["solved"] = r.solved();
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["nodes"] = r.nodes;
    out["schedule"] = std::move(r.schedule);
    return out;
  }, py::arg("instance"), py::arg("node_limit") = kDefaultNodeLimit);

  m.def("graham_bound", [](int mm) { return to_fraction(graham_bound(mm)); });
  m.def("rk_bound", [](int k, int mm) { return to_fraction(rk_bound(k, mm)); });
  m.def("r2_bound", [](int mm) { return to_fraction(r2_bound(mm)); });
  m.def("lpt_rev_bound", [](int mm) { return to_fraction(lpt_rev_bound(mm)); });
  m.def("noncritical_k_bound", [](int k, int mm) { return to_fraction(noncritical_k_bound(k, mm)); });

  m.def("generate", [](const std::string& cls, Time a, Time b, int mm, int n, std::uint64_t seed, int count) {
    return generate(GenSpec{parse_instance_class(cls), a, b, mm, n, seed, count});
  }, py::arg("cls"), py::arg("a") = 1, py::arg("b") = 100, py::arg("m") = 1, py::arg("n") = 1,
     py::arg("seed") = 0, py::arg("count") = 1);
  m.def("parse_instance", &parse_instance);
  m.def("format_instance", &format_instance);

  m.def("run_lp_battery", [](int m_max, int k_max) {
    py::list out;
    for (const auto& line : lp::run_lp_battery({m_max, k_max})) {
      py::dict d;
      d["line"] = line.to_string();
      d["optimum"] = to_fraction(line.optimum);
      d["ok"] = line.ok;
      out.append(d);
    }
    return out;
  }, py::arg("m_max") = 25, py::arg("k_max") = 6);

  m.def("compare_benchmark", [](const std::string& algo_a, const std::string& algo_b, std::uint64_t seed) {
    const Suite suite = build_suite(benchmark_suite_specs(seed));
    return format_table(compare(suite, parse_algorithm(algo_a), parse_algorithm(algo_b)));
  }, py::arg("algo_a") = "slack", py::arg("algo_b") = "lpt", py::arg("seed") = 1);
}
