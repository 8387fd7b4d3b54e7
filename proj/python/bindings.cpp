#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fzwave/fraccalc.hpp"
#include "fzwave/fundsol.hpp"
#include "fzwave/mittag_leffler.hpp"
#include "fzwave/oracles.hpp"
#include "fzwave/scaling.hpp"
#include "fzwave/solver.hpp"
#include "fzwave/verify.hpp"
#include "fzwave/zener.hpp"

namespace py = pybind11;
using namespace fzwave;

PYBIND11_MODULE(_fzwave, m) {
    m.doc() = "waves in fractional Zener viscoelastic media";

    py::register_exception<cone_proximity_error>(m, "ConeProximityError", PyExc_RuntimeError);
    py::register_exception<branch_cut_error>(m, "BranchCutError", PyExc_ValueError);

    py::class_<ZenerParams>(m, "ZenerParams")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("tau"))
        .def_readonly("alpha", &ZenerParams::alpha)
        .def_readonly("tau", &ZenerParams::tau);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init<double, std::size_t>(), py::arg("dt"), py::arg("n_steps"))
        .def_readonly("dt", &TimeGrid::dt)
        .def_readonly("n_steps", &TimeGrid::n_steps);

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, double, std::size_t>(), py::arg("x_min"), py::arg("dx"),
             py::arg("n"))
        .def_static("from_range", &Grid1D::from_range, py::arg("x_min"), py::arg("x_max"),
                    py::arg("n"))
        .def_readonly("x_min", &Grid1D::x_min)
        .def_readonly("dx", &Grid1D::dx)
        .def_readonly("n", &Grid1D::n)
        .def("x", &Grid1D::x);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
        .def_readwrite("tail_decay_target", &QuadratureConfig::tail_decay_target)
        .def_readwrite("cone_margin_min", &QuadratureConfig::cone_margin_min);

    m.def("gl_weights", &fraccalc::gl_weights, py::arg("alpha"), py::arg("n"));
    m.def("rl_derivative", &fraccalc::rl_derivative, py::arg("samples"), py::arg("grid"),
          py::arg("alpha"));
    m.def("f_alpha_kernel", &fraccalc::f_alpha_kernel, py::arg("alpha"), py::arg("t"));

    m.def("mittag_leffler", &special::mittag_leffler, py::arg("a"), py::arg("b"), py::arg("z"));

    m.def("zener_symbol", &zener::symbol, py::arg("s"), py::arg("params"));
    m.def("omega", &zener::omega, py::arg("s"), py::arg("params"));
    m.def("omega_polar", &zener::omega_polar, py::arg("rho"), py::arg("phi"), py::arg("params"));
    m.def("sector_margin", &zener::sector_margin, py::arg("params"), py::arg("sample_count"));
    m.def("delta_weight", &zener::delta_weight, py::arg("params"));
    m.def("relaxation_kernel_regular", &zener::relaxation_kernel_regular, py::arg("t"),
          py::arg("params"));

    m.def(
        "fundamental_solution",
        [](double x, double t, const ZenerParams& p, const QuadratureConfig& cfg) {
            return fundsol::fundamental_solution(SpacetimePoint(x, t), p, cfg);
        },
        py::arg("x"), py::arg("t"), py::arg("params"), py::arg("config") = QuadratureConfig{});
    m.def(
        "fundsol_dt",
        [](double x, double t, const ZenerParams& p, const QuadratureConfig& cfg) {
            return fundsol::fundsol_dt(SpacetimePoint(x, t), p, cfg);
        },
        py::arg("x"), py::arg("t"), py::arg("params"), py::arg("config") = QuadratureConfig{});
    m.def("laplace_image_S", &fundsol::laplace_image_S, py::arg("x"), py::arg("s"),
          py::arg("params"));

    m.def(
        "bromwich_invert",
        [](const std::function<Complex(Complex)>& F, double t) {
            return oracles::bromwich_invert(F, t);
        },
        py::arg("F"), py::arg("t"));
    m.def(
        "dalembert",
        [](const Field& u0, const Field& v0, const Grid1D& grid, double c, double x, double t) {
            return oracles::dalembert(u0, v0, grid, c, SpacetimePoint(x, t));
        },
        py::arg("u0"), py::arg("v0"), py::arg("grid"), py::arg("c"), py::arg("x"), py::arg("t"));
    m.def(
        "fdtd_solve",
        [](const Field& u0, const Field& v0, const Grid1D& grid, const ZenerParams& p, double dt,
           std::size_t n_steps) {
            auto r = oracles::fdtd_solve(u0, v0, grid, p, dt, n_steps);
            return py::make_tuple(r.displacement, r.stress);
        },
        py::arg("u0"), py::arg("v0"), py::arg("grid"), py::arg("params"), py::arg("dt"),
        py::arg("n_steps"));

    m.def(
        "solve",
        [](const Field& u0, const Field& v0, const ZenerParams& p, const Grid1D& grid,
           const std::vector<double>& times, bool check_cone) {
            solver::CauchyData data{u0, v0, std::nullopt, std::nullopt};
            solver::SolveOptions opts;
            opts.check_cone_coverage = check_cone;
            return solver::solve(data, p, grid, times, opts);
        },
        py::arg("u0"), py::arg("v0"), py::arg("params"), py::arg("grid"), py::arg("times"),
        py::arg("check_cone_coverage") = true);

    py::class_<PhysicalMaterial>(m, "PhysicalMaterial")
        .def(py::init<double, double, double, double, double>(), py::arg("modulus"),
             py::arg("density"), py::arg("tau_sigma"), py::arg("tau_eps"), py::arg("alpha"));
    m.def(
        "nondimensionalize",
        [](const PhysicalMaterial& mat) {
            auto [p, sf] = scaling::nondimensionalize(mat);
            return py::make_tuple(p, sf.x_star, sf.t_star);
        },
        py::arg("material"));
    m.def("wave_front_speed", &scaling::wave_front_speed, py::arg("material"));

    m.def("run_verification", [] {
        py::list out;
        for (const auto& r : verify::run_suite()) {
            py::dict d;
            d["name"] = r.name;
            d["measured"] = r.measured;
            d["threshold"] = r.threshold;
            d["passed"] = r.passed;
            out.append(d);
        }
        return out;
    });
}
