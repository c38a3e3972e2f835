#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blendflow/cli.hpp"
#include "blendflow/diagnostics.hpp"
#include "blendflow/driftflux.hpp"
#include "blendflow/errors.hpp"
#include "blendflow/gas.hpp"
#include "blendflow/oracles.hpp"
#include "blendflow/scenario.hpp"
#include "blendflow/solver.hpp"

namespace py = pybind11;
using namespace blendflow;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multicomponent isothermal pipeline flow: diagonal-form solver, "
              "synchronization diagnostics and the drift-flux reduction.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);

    py::class_<PressureLaw>(m, "PressureLaw")
        .def_static("isothermal_ideal", &PressureLaw::isothermal_ideal,
                    py::arg("sound_speed"))
        .def_static("isentropic", &PressureLaw::isentropic, py::arg("coeff"),
                    py::arg("gamma"))
        .def_static("tabulated", &PressureLaw::tabulated, py::arg("rho"),
                    py::arg("p"))
        .def("pressure", &PressureLaw::pressure)
        .def("pressure_derivative", &PressureLaw::pressure_derivative)
        .def("potential", &PressureLaw::potential)
        .def("potential_second", &PressureLaw::potential_second)
        .def("riemann_R", &PressureLaw::riemann_R)
        .def("riemann_R_inverse", &PressureLaw::riemann_R_inverse);

    m.def(
        "component_to_riemann",
        [](const PressureLaw& law, double rho, double v) {
            return component_to_riemann(law, {rho, v});
        },
        py::arg("law"), py::arg("rho"), py::arg("v"));
    m.def(
        "riemann_to_component",
        [](const PressureLaw& law, double rp, double rm) {
            const auto c = riemann_to_component(law, rp, rm);
            return std::make_pair(c.rho, c.v);
        },
        py::arg("law"), py::arg("r_plus"), py::arg("r_minus"));
    m.def(
        "eigenvalues",
        [](const PressureLaw& law, double rho, double v) {
            return eigenvalues(law, {rho, v});
        },
        py::arg("law"), py::arg("rho"), py::arg("v"));

    py::class_<Grid>(m, "Grid")
        .def(py::init([](double length, int cells) {
                 return Grid{length, cells};
             }),
             py::arg("length"), py::arg("cells"))
        .def_readwrite("length", &Grid::length)
        .def_readwrite("cells", &Grid::cells)
        .def("dx", &Grid::dx)
        .def("x", &Grid::x);

    py::class_<PhysicsParams>(m, "PhysicsParams")
        .def(py::init([](double theta, double omega_bar) {
                 return PhysicsParams{theta, omega_bar};
             }),
             py::arg("theta") = 0.0, py::arg("omega_bar") = 1.0)
        .def_readwrite("theta", &PhysicsParams::theta)
        .def_readwrite("omega_bar", &PhysicsParams::omega_bar);

    py::class_<MixtureState>(m, "MixtureState")
        .def(py::init<>())
        .def_readwrite("grid", &MixtureState::grid)
        .def_readwrite("laws", &MixtureState::laws)
        .def_readwrite("rho", &MixtureState::rho)
        .def_readwrite("v", &MixtureState::v)
        .def("validate", &MixtureState::validate)
        .def("components", &MixtureState::components)
        .def("cells", &MixtureState::cells);

    m.def("barycentric_velocity", &barycentric_velocity, py::arg("state"),
          py::arg("cell"));
    m.def("deviations", &deviations, py::arg("state"), py::arg("cell"));
    m.def("coupling_terms", &coupling_terms, py::arg("state"),
          py::arg("params"), py::arg("cell"));
    m.def("source_vartheta", &source_vartheta, py::arg("state"),
          py::arg("params"), py::arg("cell"));

    m.def("lyapunov", &lyapunov);
    m.def("energy_identity_check", &energy_identity_check);
    m.def("integral_I", &integral_I);
    m.def("boundary_terms", [](const MixtureState& s) {
        const auto b = boundary_terms(s);
        return std::make_tuple(b.b_hat, b.b_l, b.b_0);
    });
    m.def("ode_remark_solution", &ode_remark_solution, py::arg("alpha"),
          py::arg("beta"), py::arg("c0"), py::arg("t"));
    m.def("example1_velocity", &example1_velocity, py::arg("p0"),
          py::arg("theta"), py::arg("t"));

    py::class_<DiagnosticsFrame>(m, "DiagnosticsFrame")
        .def_readonly("t", &DiagnosticsFrame::t)
        .def_readonly("lyapunov", &DiagnosticsFrame::lyapunov)
        .def_readonly("b_hat", &DiagnosticsFrame::b_hat)
        .def_readonly("b_l", &DiagnosticsFrame::b_l)
        .def_readonly("b_0", &DiagnosticsFrame::b_0)
        .def_readonly("integral_i", &DiagnosticsFrame::integral_i)
        .def_readonly("energy_total", &DiagnosticsFrame::energy_total)
        .def_readonly("energy_mix", &DiagnosticsFrame::energy_mix)
        .def_readonly("sign_uniform", &DiagnosticsFrame::sign_uniform);

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("M", &BoundsReport::M)
        .def_readonly("N", &BoundsReport::N)
        .def_readonly("eps_hat", &BoundsReport::eps_hat)
        .def_readonly("beta", &BoundsReport::beta)
        .def_readonly("S0", &BoundsReport::S0)
        .def_readonly("beta_positive", &BoundsReport::beta_positive);

    py::class_<CertReport>(m, "CertReport")
        .def_readonly("pass_i", &CertReport::pass_i)
        .def_readonly("max_excess_i", &CertReport::max_excess_i)
        .def_readonly("pass_ii", &CertReport::pass_ii)
        .def_readonly("hypothesis_bhat_le_i", &CertReport::hypothesis_bhat_le_i)
        .def_readonly("hypothesis_i_ge_bl", &CertReport::hypothesis_i_ge_bl)
        .def_readonly("beta", &CertReport::beta)
        .def_readonly("eps_hat", &CertReport::eps_hat);

    py::class_<CompatibilityReport>(m, "CompatibilityReport")
        .def_readonly("pass_", &CompatibilityReport::pass)
        .def("max_residual", &CompatibilityReport::max_residual);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("frames", &Trajectory::frames)
        .def_readonly("final_state", &Trajectory::final_state)
        .def_readonly("compatibility", &Trajectory::compatibility)
        .def_readonly("steps", &Trajectory::steps);

    py::class_<Discretization>(m, "Discretization")
        .def(py::init([](int cells, double cfl, double t_end, int stride) {
                 return Discretization{cells, cfl, t_end, stride};
             }),
             py::arg("cells") = 128, py::arg("cfl") = 0.9,
             py::arg("t_end") = 1.0, py::arg("output_stride") = 1)
        .def_readwrite("cells", &Discretization::cells)
        .def_readwrite("cfl", &Discretization::cfl)
        .def_readwrite("t_end", &Discretization::t_end)
        .def_readwrite("output_stride", &Discretization::output_stride);

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("physics", &Scenario::physics)
        .def_readwrite("length", &Scenario::length)
        .def_readwrite("disc", &Scenario::disc)
        .def("initial_state", &Scenario::initial_state)
        .def("serialize", [](const Scenario& sc) {
            return serialize_scenario(sc);
        });

    m.def("parse_scenario", &parse_scenario, py::arg("toml_text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("run_scenario", [](const Scenario& sc) { return run(sc); });
    m.def("running_bounds", &running_bounds, py::arg("frames"),
          py::arg("params"), py::arg("length"));
    m.def(
        "certify_envelope",
        [](const std::vector<DiagnosticsFrame>& frames, double beta,
           double eps_hat, std::optional<double> t_star, double rel_tol,
           double abs_tol) {
            return certify_envelope(frames, beta, eps_hat, t_star,
                                    {rel_tol, abs_tol});
        },
        py::arg("frames"), py::arg("beta"), py::arg("eps_hat"),
        py::arg("t_star") = std::nullopt, py::arg("rel_tol") = 0.05,
        py::arg("abs_tol") = 1e-10);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("times", &ComparisonReport::times)
        .def_readonly("lyap_full", &ComparisonReport::lyap_full)
        .def_readonly("field_distance", &ComparisonReport::field_distance)
        .def_readonly("S0", &ComparisonReport::S0);

    m.def(
        "compare_scenario",
        [](const Scenario& sc, double omega_bar) {
            return compare_models(sc, omega_bar);
        },
        py::arg("scenario"), py::arg("omega_bar"));

    m.def("cmd_run", &cli::cmd_run, py::arg("scenario_path"),
          py::arg("out_dir"), py::arg("extra_snapshots") = std::vector<double>{});
    m.def("cmd_certify", &cli::cmd_certify, py::arg("frames_path"),
          py::arg("bounds_path"), py::arg("t_star") = std::nullopt,
          py::arg("out_dir") = std::string("out"));
}
