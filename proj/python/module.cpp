// Python bindings for the solver core. Everything returns plain python
// containers; fields cross the boundary as coefficient-built objects, not
// arrays, since the intended use is driving runs and reading diagnostics.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "muskat/besov.hpp"
#include "muskat/config.hpp"
#include "muskat/dn.hpp"
#include "muskat/errors.hpp"
#include "muskat/evolution.hpp"
#include "muskat/fd_oracle.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/multipliers.hpp"
#include "muskat/params.hpp"
#include "muskat/random_fields.hpp"
#include "muskat/two_phase.hpp"
#include "muskat/verify.hpp"

namespace py = pybind11;
using namespace muskat;

namespace {

SpectralField field_from_modes(const TorusGrid& g,
                               const std::vector<std::tuple<int, double, double>>& modes) {
    std::vector<Mode> ms;
    ms.reserve(modes.size());
    for (const auto& [k, amplitude, phase] : modes)
        ms.push_back(Mode{{k, 0}, amplitude, phase});
    return SpectralField::from_modes(g, ms);
}

} // namespace

PYBIND11_MODULE(muskat, m) {
    m.doc() = "pseudo-spectral solver for the Muskat interface problem";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<SmallnessViolated>(m, "SmallnessViolated", base.ptr());
    py::register_exception<DataTooLarge>(m, "DataTooLarge", base.ptr());
    py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
    py::register_exception<PoorFit>(m, "PoorFit", base.ptr());

    py::enum_<ProblemKind>(m, "ProblemKind")
        .value("one_phase", ProblemKind::OnePhase)
        .value("two_phase", ProblemKind::TwoPhase);

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](ProblemKind kind, double mu_minus, double rho_minus, double mu_plus,
                         double rho_plus) {
                 PhysicalParams p{kind, mu_minus, rho_minus, mu_plus, rho_plus};
                 p.validate();
                 return p;
             }),
             py::arg("kind") = ProblemKind::OnePhase, py::arg("mu_minus") = 1.0,
             py::arg("rho_minus") = 1.0, py::arg("mu_plus") = 0.0, py::arg("rho_plus") = 0.0)
        .def_readonly("kind", &PhysicalParams::kind)
        .def_readonly("mu_minus", &PhysicalParams::mu_minus)
        .def_readonly("rho_minus", &PhysicalParams::rho_minus)
        .def_readonly("mu_plus", &PhysicalParams::mu_plus)
        .def_readonly("rho_plus", &PhysicalParams::rho_plus)
        .def_property_readonly("kappa", &PhysicalParams::kappa)
        .def_property_readonly("density_jump", &PhysicalParams::density_jump);

    py::class_<TorusGrid>(m, "TorusGrid")
        .def(py::init<int, int, double>(), py::arg("dim"), py::arg("modes_per_axis"),
             py::arg("period"))
        .def_property_readonly("dim", &TorusGrid::dim)
        .def_property_readonly("n", &TorusGrid::n)
        .def_property_readonly("period", &TorusGrid::period)
        .def_property_readonly("k_min", &TorusGrid::k_min)
        .def_property_readonly("k_max_axis", &TorusGrid::k_max_axis);

    py::class_<StripGrid>(m, "StripGrid")
        .def(py::init<TorusGrid, double, int>(), py::arg("torus"), py::arg("depth"),
             py::arg("nodes"))
        .def_property_readonly("depth", &StripGrid::depth)
        .def_property_readonly("nodes", &StripGrid::nodes);

    py::class_<SpectralField>(m, "SpectralField")
        .def(py::init<const TorusGrid&>(), py::arg("grid"))
        .def_static("from_modes", &field_from_modes, py::arg("grid"), py::arg("modes"),
                    "modes: list of (k, amplitude, phase) for amplitude*cos(k x + phase)")
        .def_static("from_physical", &SpectralField::from_physical, py::arg("grid"),
                    py::arg("values"))
        .def("to_physical", &SpectralField::to_physical)
        .def("max_abs", &SpectralField::max_abs)
        .def("mean_zero", &SpectralField::mean_zero)
        .def("grid", &SpectralField::grid, py::return_value_policy::copy)
        .def("__add__", [](const SpectralField& a, const SpectralField& b) { return a + b; })
        .def("__sub__", [](const SpectralField& a, const SpectralField& b) { return a - b; })
        .def("__mul__", [](const SpectralField& a, double s) { return a * s; })
        .def("__rmul__", [](const SpectralField& a, double s) { return s * a; });

    m.def("modulus", &modulus, py::arg("field"), "|D| applied to the field");

    py::class_<DyadicPartition>(m, "DyadicPartition")
        .def_property_readonly("j_min", &DyadicPartition::j_min)
        .def_property_readonly("j_max", &DyadicPartition::j_max);
    m.def("make_partition", &make_partition, py::arg("grid"));
    m.def(
        "besov_norm",
        [](const SpectralField& u, double s, const DyadicPartition& p) {
            return besov_norm(u, s, p);
        },
        py::arg("field"), py::arg("s"), py::arg("partition"));
    m.def(
        "besov_norm",
        [](const SpectralField& u, double s) {
            return besov_norm(u, s, make_partition(u.grid()));
        },
        py::arg("field"), py::arg("s"));

    py::class_<DnSettings>(m, "DnSettings")
        .def(py::init<>())
        .def_readwrite("tol", &DnSettings::tol)
        .def_readwrite("max_iters", &DnSettings::max_iters)
        .def_readwrite("c_star", &DnSettings::c_star)
        .def_readwrite("enforce_smallness", &DnSettings::enforce_smallness);

    py::class_<DnOperator>(m, "DnOperator")
        .def(py::init<const StripGrid&, const SpectralField&, DnSettings>(), py::arg("strip"),
             py::arg("eta"), py::arg("settings") = DnSettings{})
        .def("apply", &DnOperator::apply, py::arg("f"), "G^-(eta) f")
        .def("remainder", &DnOperator::remainder, py::arg("f"), "R^-(eta) f")
        .def("eta_b0", &DnOperator::eta_b0);

    m.def("fd_dn", &fd_dn, py::arg("eta"), py::arg("f"), py::arg("nx"), py::arg("nz"),
          py::arg("depth"), "finite-difference oracle for the lower operator");

    py::class_<TwoPhaseState>(m, "TwoPhaseState")
        .def_readonly("eta", &TwoPhaseState::eta)
        .def_readonly("f_minus", &TwoPhaseState::f_minus)
        .def_readonly("f_plus", &TwoPhaseState::f_plus)
        .def_readonly("kappa_eff", &TwoPhaseState::kappa_eff)
        .def_readonly("iterations", &TwoPhaseState::iterations)
        .def_readonly("residual", &TwoPhaseState::residual);
    m.def(
        "solve_two_phase",
        [](const SpectralField& eta, const PhysicalParams& params, const StripGrid& strip) {
            return solve_two_phase(eta, params, strip);
        },
        py::arg("eta"), py::arg("params"), py::arg("strip"));

    py::class_<NormReport>(m, "NormReport")
        .def_readonly("kappa", &NormReport::kappa)
        .def_readonly("times", &NormReport::times)
        .def_readonly("besov_1", &NormReport::besov_1)
        .def_readonly("besov_2", &NormReport::besov_2)
        .def_readonly("x1_kappa", &NormReport::x1_kappa)
        .def("csv", &NormReport::csv);

    py::class_<SolutionPath>(m, "SolutionPath")
        .def_readonly("times", &SolutionPath::times)
        .def_readonly("report", &SolutionPath::report)
        .def_readonly("iterations", &SolutionPath::iterations)
        .def_readonly("residual", &SolutionPath::residual)
        .def_readonly("contraction_ratio", &SolutionPath::contraction_ratio)
        .def("eta", [](const SolutionPath& p, std::size_t i) { return p.etas.at(i); },
             py::arg("index"));

    py::class_<EvolutionSettings>(m, "EvolutionSettings")
        .def(py::init<>())
        .def_readwrite("tol", &EvolutionSettings::tol)
        .def_readwrite("max_iters", &EvolutionSettings::max_iters)
        .def_readwrite("delta", &EvolutionSettings::delta);

    m.def(
        "solve_global_picard",
        [](const SpectralField& eta0, const PhysicalParams& params, double T, int K,
           const StripGrid& strip, const EvolutionSettings& settings) {
            return solve_global_picard(eta0, params, T, K, strip, settings);
        },
        py::arg("eta0"), py::arg("params"), py::arg("T"), py::arg("K"), py::arg("strip"),
        py::arg("settings") = EvolutionSettings{});

    py::class_<StabilityResult>(m, "StabilityResult")
        .def_readonly("ratio", &StabilityResult::ratio)
        .def_readonly("identical_inputs", &StabilityResult::identical_inputs);
    m.def(
        "stability_probe",
        [](const SpectralField& a, const SpectralField& b, double T, int K,
           const PhysicalParams& params, const StripGrid& strip) {
            return stability_probe(a, b, T, K, params, strip);
        },
        py::arg("eta0_a"), py::arg("eta0_b"), py::arg("T"), py::arg("K"), py::arg("params"),
        py::arg("strip"));

    py::class_<ProbeResult>(m, "ProbeResult")
        .def_readonly("slope", &ProbeResult::slope)
        .def_readonly("intercept", &ProbeResult::intercept)
        .def_readonly("r2", &ProbeResult::r2);
    m.def(
        "epsilon_scaling_probe",
        [](const std::string& quantity, const std::vector<double>& eps,
           const SpectralField& base_eta, const SpectralField& base_f, const StripGrid& strip,
           const PhysicalParams& params, double horizon, int time_nodes) {
            ProbeContext ctx{strip};
            ctx.params = params;
            ctx.horizon = horizon;
            ctx.time_nodes = time_nodes;
            return epsilon_scaling_probe(quantity, eps, base_eta, base_f, ctx);
        },
        py::arg("quantity"), py::arg("eps_list"), py::arg("base_eta"), py::arg("base_f"),
        py::arg("strip"), py::arg("params") = PhysicalParams{}, py::arg("horizon") = 0.25,
        py::arg("time_nodes") = 32);

    py::class_<ToleranceSet>(m, "ToleranceSet")
        .def(py::init<>())
        .def_readwrite("picard_tol", &ToleranceSet::picard_tol)
        .def_readwrite("dn_tol", &ToleranceSet::dn_tol)
        .def_readwrite("c_star", &ToleranceSet::c_star)
        .def_readwrite("delta", &ToleranceSet::delta);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("problem", &RunConfig::problem)
        .def_readonly("N", &RunConfig::N)
        .def_readonly("T", &RunConfig::T)
        .def_readonly("K", &RunConfig::K)
        .def_readonly("dt", &RunConfig::dt)
        .def_readonly("params", &RunConfig::params)
        .def_readonly("tolerances", &RunConfig::tolerances)
        .def_readonly("seed", &RunConfig::seed)
        .def_readonly("output_dir", &RunConfig::output_dir);
    m.def("parse_run_config", &parse_run_config, py::arg("json_text"));
    m.def("load_run_config", &load_run_config, py::arg("path"));
    m.def("config_json", &config_json, py::arg("config"));
    m.def("config_grid", &config_grid, py::arg("config"));
    m.def("config_strip", &config_strip, py::arg("config"));
    m.def("build_eta0", &build_eta0, py::arg("config"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::passed)
        .def_readonly("within_budget", &CriterionResult::within_budget)
        .def_readonly("measured", &CriterionResult::measured)
        .def_readonly("detail", &CriterionResult::detail);
    py::class_<VerifySettings>(m, "VerifySettings")
        .def(py::init<>())
        .def_readwrite("seed", &VerifySettings::seed)
        .def_readwrite("tolerances", &VerifySettings::tolerances);
    m.def("criterion_count", &criterion_count);
    m.def(
        "run_criterion",
        [](int id, const VerifySettings& s) { return run_criterion(id, s); }, py::arg("id"),
        py::arg("settings") = VerifySettings{});

    py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));
    m.def("random_trig_poly", &random_trig_poly, py::arg("rng"), py::arg("grid"),
          py::arg("count"), py::arg("k_max_axis"), py::arg("sup_target"));
}
