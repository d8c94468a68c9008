#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "airs/beamforming.hpp"
#include "airs/deployment.hpp"

namespace py = pybind11;
using namespace airs;

namespace {

struct MatrixResult {
  double snr = 0.0;
  double power = 0.0;
  double eta = 0.0;
};

// Explicit channel matrices with optimal beamforming on the zig-zag layout.
MatrixResult evaluate_matrix(const SystemParams& p, int active_index) {
  const CascadeLink link(p, zigzag_geometry(p), active_index);
  const Beamforming bf = optimal_beamforming(link);
  return {full_snr(link, bf.phases, bf.beam), full_power(link, bf.phases, bf.beam), bf.phases.eta};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Placement of one active IRS in a cascade of passive IRSs";

  py::enum_<Mode>(m, "Mode").value("WIT", Mode::wit).value("WPT", Mode::wpt);

  py::enum_<CaseLabel>(m, "CaseLabel")
      .value("I", CaseLabel::case_i)
      .value("II", CaseLabel::case_ii)
      .value("III", CaseLabel::case_iii)
      .value("BRUTE_FORCE_FALLBACK", CaseLabel::brute_force_fallback)
      .value("FINAL", CaseLabel::final_irs);

  py::class_<ArrayShape>(m, "ArrayShape")
      .def(py::init<>())
      .def(py::init([](int nx, int nz) { return ArrayShape{nx, nz}; }), py::arg("nx"), py::arg("nz"))
      .def_readwrite("nx", &ArrayShape::nx)
      .def_readwrite("nz", &ArrayShape::nz)
      .def_property_readonly("count", &ArrayShape::count)
      .def_static("square_ish", &ArrayShape::square_ish, py::arg("n"));

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("num_irs", &SystemParams::num_irs)
      .def_readwrite("bs_antennas", &SystemParams::bs_antennas)
      .def_readwrite("active", &SystemParams::active)
      .def_readwrite("passive", &SystemParams::passive)
      .def_readwrite("dist_bs", &SystemParams::dist_bs)
      .def_readwrite("dist_user", &SystemParams::dist_user)
      .def_readwrite("dist_inter", &SystemParams::dist_inter)
      .def_readwrite("tx_power", &SystemParams::tx_power)
      .def_readwrite("amp_power", &SystemParams::amp_power)
      .def_readwrite("noise_power", &SystemParams::noise_power)
      .def_readwrite("pathloss_exponent", &SystemParams::pathloss_exponent)
      .def_readwrite("ref_gain", &SystemParams::ref_gain)
      .def_readwrite("wavelength", &SystemParams::wavelength)
      .def_readwrite("bs_spacing", &SystemParams::bs_spacing)
      .def_readwrite("irs_spacing", &SystemParams::irs_spacing)
      .def_readwrite("fraunhofer_distance", &SystemParams::fraunhofer_distance)
      .def_property_readonly("na", &SystemParams::na)
      .def_property_readonly("np", &SystemParams::np)
      .def("with_np", [](SystemParams p, int np) {
        p.passive = ArrayShape::square_ish(np);
        return p;
      }, py::arg("np"));

  py::class_<LinkBudget>(m, "LinkBudget")
      .def_readonly("kappa_bs", &LinkBudget::kappa_bs)
      .def_readonly("kappa_inter", &LinkBudget::kappa_inter)
      .def_readonly("kappa_user", &LinkBudget::kappa_user)
      .def_readonly("c_active", &LinkBudget::c_active)
      .def_readonly("c_tx", &LinkBudget::c_tx)
      .def_readonly("np_kappa_inter", &LinkBudget::np_kappa_inter)
      .def_property_readonly("gain_decreasing", &LinkBudget::gain_decreasing);

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_property_readonly("severity", [](const Diagnostic& d) { return to_string(d.severity); })
      .def_readonly("code", &Diagnostic::code)
      .def_readonly("message", &Diagnostic::message);

  py::class_<CascadeModel>(m, "CascadeModel")
      .def(py::init(&CascadeModel::from), py::arg("params"))
      .def_readonly("budget", &CascadeModel::budget)
      .def_readonly("num_irs", &CascadeModel::num_irs)
      .def_readonly("np", &CascadeModel::np)
      .def_readonly("na", &CascadeModel::na);

  py::class_<ObjectiveValue>(m, "ObjectiveValue")
      .def_readonly("value", &ObjectiveValue::value)
      .def_readonly("index", &ObjectiveValue::index)
      .def_readonly("mode", &ObjectiveValue::mode)
      .def_property_readonly("db", &ObjectiveValue::db);

  py::class_<DeploymentSolution>(m, "DeploymentSolution")
      .def_readonly("index", &DeploymentSolution::index)
      .def_readonly("objective", &DeploymentSolution::objective)
      .def_readonly("case_label", &DeploymentSolution::case_label)
      .def_property_readonly("case_name", [](const DeploymentSolution& s) { return to_string(s.case_label); })
      .def_readonly("relaxed_index", &DeploymentSolution::relaxed_index)
      .def_readonly("brute_force_index", &DeploymentSolution::brute_force_index)
      .def_readonly("brute_force_agrees", &DeploymentSolution::brute_force_agrees);

  py::class_<RatioReport>(m, "RatioReport")
      .def_readonly("optimal_index", &RatioReport::optimal_index)
      .def_readonly("middle_index", &RatioReport::middle_index)
      .def_readonly("vs_middle", &RatioReport::vs_middle)
      .def_readonly("vs_middle_formula", &RatioReport::vs_middle_formula)
      .def_readonly("vs_middle_limit", &RatioReport::vs_middle_limit)
      .def_readonly("vs_all_pirs", &RatioReport::vs_all_pirs)
      .def_readonly("vs_all_pirs_formula", &RatioReport::vs_all_pirs_formula)
      .def_readonly("vs_all_pirs_limit", &RatioReport::vs_all_pirs_limit)
      .def_readonly("rho1", &RatioReport::rho1)
      .def_readonly("rho2", &RatioReport::rho2);

  py::class_<MatrixResult>(m, "MatrixResult")
      .def_readonly("snr", &MatrixResult::snr)
      .def_readonly("power", &MatrixResult::power)
      .def_readonly("eta", &MatrixResult::eta);

  m.def("dbm_to_watts", &dbm_to_watts, py::arg("dbm"));
  m.def("watts_to_dbm", &watts_to_dbm, py::arg("watts"));
  m.def("derive_link_budget", &derive_link_budget, py::arg("params"));
  m.def("validate", &validate, py::arg("params"));

  m.def("snr", [](const SystemParams& p, int l) { return snr_closed(CascadeModel::from(p), l); },
        py::arg("params"), py::arg("active_index"));
  m.def("power", [](const SystemParams& p, int l) { return power_closed(CascadeModel::from(p), l); },
        py::arg("params"), py::arg("active_index"));
  m.def("evaluate_matrix", &evaluate_matrix, py::arg("params"), py::arg("active_index"));

  m.def("optimal_index", [](const SystemParams& p, Mode mode) { return optimal_index(CascadeModel::from(p), mode); },
        py::arg("params"), py::arg("mode"));
  m.def("brute_force_index",
        [](const SystemParams& p, Mode mode) { return brute_force_index(CascadeModel::from(p), mode); },
        py::arg("params"), py::arg("mode"));
  m.def("wit_saturation_np", [](const SystemParams& p) { return wit_saturation_np(CascadeModel::from(p)); },
        py::arg("params"));
  m.def("middle_index", &middle_index, py::arg("num_irs"));
  m.def("scheme_middle", [](const SystemParams& p, Mode mode) { return scheme_middle(CascadeModel::from(p), mode); },
        py::arg("params"), py::arg("mode"));
  m.def("scheme_all_pirs",
        [](const SystemParams& p, Mode mode) { return scheme_all_pirs(CascadeModel::from(p), mode); },
        py::arg("params"), py::arg("mode"));
  m.def("wpt_crossover_np", [](const SystemParams& p) { return wpt_crossover_np(CascadeModel::from(p)); },
        py::arg("params"));
  m.def("ratio_diagnostics",
        [](const SystemParams& p, Mode mode) { return ratio_diagnostics(CascadeModel::from(p), mode); },
        py::arg("params"), py::arg("mode"));
}
