// Python bindings for the main operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "haq/generators.hpp"
#include "haq/io.hpp"
#include "haq/open_set.hpp"
#include "haq/oracle.hpp"

namespace py = pybind11;
using namespace haq;

namespace {

SolveMode solve_mode(const std::string& name) {
  if (name == "popv") return SolveMode::kPopv;
  if (name == "pov") return SolveMode::kPov;
  if (name == "perpo") return SolveMode::kPerpo;
  throw std::invalid_argument("mode must be popv|pov|perpo");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "house allocation with lower and upper quotas";

  py::register_exception<guard_error>(m, "GuardError");

  py::class_<ProjectRecord>(m, "ProjectRecord")
      .def(py::init<std::string, int, int>(), py::arg("id"), py::arg("lower"),
           py::arg("upper"))
      .def_readonly("id", &ProjectRecord::id)
      .def_readonly("lower", &ProjectRecord::lower)
      .def_readonly("upper", &ProjectRecord::upper);

  py::class_<Instance>(m, "Instance")
      .def(py::init<std::vector<std::string>, std::vector<ProjectRecord>,
                    std::vector<std::vector<std::string>>>(),
           py::arg("applicants"), py::arg("projects"), py::arg("prefs"))
      .def_property_readonly("applicant_count", &Instance::applicant_count)
      .def_property_readonly("project_count", &Instance::project_count)
      .def("applicant_id", &Instance::applicant_id)
      .def("project", &Instance::project)
      .def("prefs", &Instance::prefs)
      .def("lmax", &Instance::lmax)
      .def("umax", &Instance::umax)
      .def("__repr__", [](const Instance& inst) {
        return "<Instance n=" + std::to_string(inst.applicant_count()) +
               " m=" + std::to_string(inst.project_count()) + ">";
      });

  py::class_<Matching>(m, "Matching")
      .def(py::init<std::vector<int>>(), py::arg("assignment"))
      .def_static("empty", &Matching::empty)
      .def_static("from_pairs", &Matching::from_pairs)
      .def("at", &Matching::at)
      .def_property_readonly("assignment",
                             [](const Matching& m) { return m.raw(); })
      .def("matched_count", &Matching::matched_count)
      .def("__eq__", [](const Matching& a, const Matching& b) { return a == b; });

  py::class_<WeightedInstance>(m, "WeightedInstance")
      .def(py::init<Instance, std::vector<std::vector<Weight>>>(),
           py::arg("base"), py::arg("weights"))
      .def_static("uniform", &WeightedInstance::uniform)
      .def_property_readonly("base", &WeightedInstance::base)
      .def("edge_weight", &WeightedInstance::edge_weight)
      .def_property_readonly("max_weight", &WeightedInstance::max_weight);

  m.def("validate_instance", &validate_instance);
  m.def("is_feasible", &is_feasible);
  m.def("rank_of", &rank_of);
  m.def("popularity_margin", &popularity_margin);
  m.def("dominates", &dominates);
  m.def("matching_weight", &matching_weight);

  py::class_<OracleLimits>(m, "OracleLimits")
      .def(py::init<>())
      .def_readwrite("max_applicants", &OracleLimits::max_applicants)
      .def_readwrite("max_projects", &OracleLimits::max_projects)
      .def_readwrite("unbounded", &OracleLimits::unbounded);

  m.def("all_feasible_matchings", &all_feasible_matchings, py::arg("inst"),
        py::arg("limits") = OracleLimits{});
  m.def(
      "oracle_verify",
      [](const Instance& inst, const Matching& m, const std::string& mode,
         const OracleLimits& limits) {
        return oracle_verify(
            inst, m, mode == "popular" ? VerifyMode::kPopular : VerifyMode::kPareto,
            limits);
      },
      py::arg("inst"), py::arg("matching"), py::arg("mode"),
      py::arg("limits") = OracleLimits{});
  m.def(
      "oracle_exists",
      [](const Instance& inst, const std::string& mode,
         const OracleLimits& limits) {
        return oracle_exists(inst,
                             mode == "popular" ? ExistsMode::kPopular
                                               : ExistsMode::kPerfectPareto,
                             limits);
      },
      py::arg("inst"), py::arg("mode"), py::arg("limits") = OracleLimits{});
  m.def("oracle_max_weight", &oracle_max_weight, py::arg("winst"),
        py::arg("limits") = OracleLimits{});

  m.def("reduce_perpo", &reduce_perpo);
  m.def(
      "reduce_verify",
      [](const Instance& inst, const Matching& m, const std::string& mode) {
        ThresholdedReduction r = reduce_verify(
            inst, m, mode == "popv" ? ReduceMode::kPopv : ReduceMode::kPov);
        return py::make_tuple(r.winst, r.threshold);
      },
      py::arg("inst"), py::arg("matching"), py::arg("mode"));
  m.def("kernelize", &kernelize, py::arg("winst"),
        py::arg("limits") = KernelLimits{});
  py::class_<KernelLimits>(m, "KernelLimits")
      .def(py::init<>())
      .def_readwrite("max_applicants", &KernelLimits::max_applicants);

  m.def("add_last_resorts", &add_last_resorts);
  m.def("find_heavier_neighboring", &find_heavier_neighboring);
  m.def("max_weight_lq2", &max_weight_lq2);
  m.def(
      "solve_lq2",
      [](const Instance& inst, const std::string& mode,
         const std::optional<Matching>& m) {
        return solve_lq2(inst, solve_mode(mode), m);
      },
      py::arg("inst"), py::arg("mode"), py::arg("matching") = std::nullopt);

  py::class_<FptLimits>(m, "FptLimits")
      .def(py::init<>())
      .def_readwrite("max_quota_projects", &FptLimits::max_quota_projects);
  m.def(
      "dominating_with_open_set",
      [](const Instance& inst, const Matching& m,
         const std::vector<std::string>& open) {
        return dominating_with_open_set(inst, m, OpenSet::of(inst, open));
      },
      py::arg("inst"), py::arg("matching"), py::arg("open"));
  m.def(
      "max_weight_with_open_set",
      [](const WeightedInstance& winst, const std::vector<std::string>& open) {
        return max_weight_with_open_set(winst,
                                        OpenSet::of(winst.base(), open));
      },
      py::arg("winst"), py::arg("open"));
  m.def(
      "max_weight_fpt",
      [](const WeightedInstance& winst, const FptLimits& limits) {
        return max_weight_fpt(winst, limits);
      },
      py::arg("winst"), py::arg("limits") = FptLimits{});
  m.def(
      "solve_fpt",
      [](const Instance& inst, const std::string& mode,
         const std::optional<Matching>& m, const FptLimits& limits) {
        return solve_fpt(inst, solve_mode(mode), m, limits);
      },
      py::arg("inst"), py::arg("mode"), py::arg("matching") = std::nullopt,
      py::arg("limits") = FptLimits{});

  py::class_<X3CInstance>(m, "X3CInstance")
      .def(py::init<std::vector<std::string>,
                    std::vector<std::array<int, 3>>>(),
           py::arg("elements"), py::arg("sets"))
      .def_readonly("elements", &X3CInstance::elements)
      .def_readonly("sets", &X3CInstance::sets);
  m.def("normalize_x3c", &normalize_x3c);
  m.def("solve_x3c", &solve_x3c, py::arg("x"), py::arg("max_sets_guard") = 26);
  m.def("gen_condorcet", [](const std::string& variant) {
    return gen_condorcet(variant == "unit" ? CondorcetVariant::kUnit
                                           : CondorcetVariant::kLq3);
  });
  m.def("gen_popv_x3c", &gen_popv_x3c);
  m.def("gen_perpo_x3c", &gen_perpo_x3c);
  m.def("gen_pop_x3c", &gen_pop_x3c);
  py::class_<RoommatesInstance>(m, "RoommatesInstance")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<int>>>(),
           py::arg("vertices"), py::arg("prefs"));
  m.def("gen_pop_from_roommates", &gen_pop_from_roommates);
  py::class_<RandomSpec>(m, "RandomSpec")
      .def(py::init<>())
      .def_readwrite("seed", &RandomSpec::seed)
      .def_readwrite("applicants", &RandomSpec::applicants)
      .def_readwrite("projects", &RandomSpec::projects)
      .def_readwrite("quota_max", &RandomSpec::quota_max)
      .def_readwrite("list_min", &RandomSpec::list_min)
      .def_readwrite("list_max", &RandomSpec::list_max);
  m.def("gen_random", &gen_random);

  m.def("parse_instance", [](const std::string& text) {
    ParsedInstance p = parse_instance(text);
    return py::make_tuple(p.instance, p.weighted);
  });
  m.def("serialize_instance", &serialize_instance);
  m.def("serialize_weighted", &serialize_weighted);
  m.def("parse_matching", &parse_matching);
  m.def("serialize_matching", &serialize_matching);
}
