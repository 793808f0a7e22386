// Python bindings exposing the main operations of the library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dipspec/bessel_im.hpp"
#include "dipspec/bounds.hpp"
#include "dipspec/channels.hpp"
#include "dipspec/mathieu.hpp"
#include "dipspec/oracle_radial.hpp"

namespace py = pybind11;
using namespace dipspec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral counting for 2d dipole-type Schrodinger/Dirac operators";

    py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);
    py::register_exception<NoSignChange>(m, "NoSignChange", PyExc_RuntimeError);
    py::register_exception<UnderflowError>(m, "UnderflowError", PyExc_RuntimeError);
    py::register_exception<GridInadequate>(m, "GridInadequate", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_RuntimeError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("eig_tol", &Tolerances::eig_tol)
        .def_readwrite("root_tol", &Tolerances::root_tol)
        .def_readwrite("quad_tol", &Tolerances::quad_tol);

    py::class_<Tridiagonal>(m, "Tridiagonal")
        .def(py::init<>())
        .def_readwrite("diag", &Tridiagonal::diag)
        .def_readwrite("offdiag", &Tridiagonal::offdiag);

    m.def("sturm_count", &sturm_count, py::arg("matrix"), py::arg("threshold"),
          "Number of eigenvalues strictly below the threshold");
    m.def("tridiag_eigenvalue", &tridiag_eigenvalue, py::arg("matrix"), py::arg("k"),
          py::arg("tol") = Tolerances{});

    // mathieu
    py::class_<mathieu::MathieuSpectrum>(m, "MathieuSpectrum")
        .def_readonly("b", &mathieu::MathieuSpectrum::b)
        .def_readonly("truncation", &mathieu::MathieuSpectrum::truncation)
        .def_readonly("eigenvalues", &mathieu::MathieuSpectrum::eigenvalues)
        .def_readonly("converged", &mathieu::MathieuSpectrum::converged);
    py::class_<mathieu::McLachlanGroundState>(m, "McLachlanGroundState")
        .def_readonly("three_term_value", &mathieu::McLachlanGroundState::three_term_value)
        .def_readonly("continued_fraction_value",
                      &mathieu::McLachlanGroundState::continued_fraction_value);
    m.def("mathieu_matrix", &mathieu::build_matrix, py::arg("b"), py::arg("modes"));
    m.def("mathieu_spectrum", &mathieu::spectrum, py::arg("b"), py::arg("n_eigs"),
          py::arg("tol") = Tolerances{});
    m.def("ground_state_mclachlan", &mathieu::ground_state_mclachlan, py::arg("b"),
          py::arg("tol") = Tolerances{});
    m.def("trace_sqrt_neg", &mathieu::trace_sqrt_neg, py::arg("b"), py::arg("a") = 0.0,
          py::arg("tol") = Tolerances{});

    // bessel
    py::class_<bessel::ZeroTable::Entry>(m, "ZeroEntry")
        .def_readonly("n", &bessel::ZeroTable::Entry::n)
        .def_readonly("asymptotic", &bessel::ZeroTable::Entry::asymptotic)
        .def_readonly("refined", &bessel::ZeroTable::Entry::refined);
    py::class_<bessel::ZeroTable>(m, "ZeroTable")
        .def_readonly("nu", &bessel::ZeroTable::nu)
        .def_readonly("entries", &bessel::ZeroTable::entries);
    m.def("phase", &bessel::phase, py::arg("nu"));
    m.def("eval_k", &bessel::eval_K, py::arg("nu"), py::arg("x"), py::arg("tol") = Tolerances{});
    m.def("zero_asymptotic", &bessel::zero_asymptotic, py::arg("nu"), py::arg("n"));
    m.def("zero_refined", &bessel::zero_refined, py::arg("nu"), py::arg("n"),
          py::arg("tol") = Tolerances{});
    m.def("make_zero_table", &bessel::make_zero_table, py::arg("nu"), py::arg("n_max"),
          py::arg("tol") = Tolerances{});
    m.def("count_zeros_above", &bessel::count_zeros_above, py::arg("nu"), py::arg("s"),
          py::arg("tol") = Tolerances{});
    m.def("count_zeros_above_floor", &bessel::count_zeros_above_floor, py::arg("nu"),
          py::arg("s"));

    // channels
    py::enum_<channels::Boundary>(m, "Boundary")
        .value("Dirichlet", channels::Boundary::Dirichlet)
        .value("Neumann", channels::Boundary::Neumann);
    py::class_<channels::DipoleSpec>(m, "DipoleSpec")
        .def(py::init([](double a, double b, channels::Boundary bc) {
                 return channels::DipoleSpec{a, b, bc};
             }),
             py::arg("a") = 0.0, py::arg("b") = 0.0,
             py::arg("boundary") = channels::Boundary::Dirichlet)
        .def_readwrite("a", &channels::DipoleSpec::a)
        .def_readwrite("b", &channels::DipoleSpec::b)
        .def_readwrite("boundary", &channels::DipoleSpec::boundary);
    py::class_<channels::Channel>(m, "Channel")
        .def_readonly("index", &channels::Channel::index)
        .def_readonly("mathieu_eigenvalue", &channels::Channel::mathieu_eigenvalue)
        .def_readonly("open", &channels::Channel::open)
        .def_readonly("nu", &channels::Channel::nu);
    py::class_<channels::ChannelSet>(m, "ChannelSet")
        .def_readonly("spec", &channels::ChannelSet::spec)
        .def_readonly("channels", &channels::ChannelSet::channels)
        .def("open_count", &channels::ChannelSet::open_count);
    py::class_<channels::ChannelCount>(m, "ChannelCount")
        .def_readonly("total", &channels::ChannelCount::total)
        .def_readonly("per_channel", &channels::ChannelCount::per_channel);
    py::class_<channels::CountingCurve::Sample>(m, "CurveSample")
        .def_readonly("E", &channels::CountingCurve::Sample::E)
        .def_readonly("total", &channels::CountingCurve::Sample::total)
        .def_readonly("per_channel", &channels::CountingCurve::Sample::per_channel);
    py::class_<channels::CountingCurve>(m, "CountingCurve")
        .def_readonly("samples", &channels::CountingCurve::samples)
        .def_readonly("fitted_slope", &channels::CountingCurve::fitted_slope)
        .def_readonly("theoretical_slope", &channels::CountingCurve::theoretical_slope)
        .def_readonly("residual", &channels::CountingCurve::residual)
        .def_readonly("slope_stderr", &channels::CountingCurve::slope_stderr);
    m.def("decompose", &channels::decompose, py::arg("spec"), py::arg("tol") = Tolerances{});
    m.def(
        "count_eigenvalues",
        [](const channels::DipoleSpec& spec, double E, const Tolerances& tol) {
            return channels::count_eigenvalues(spec, E, tol);
        },
        py::arg("spec"), py::arg("E"), py::arg("tol") = Tolerances{});
    m.def("counting_curve", &channels::counting_curve, py::arg("spec"), py::arg("E_lo"),
          py::arg("E_hi"), py::arg("points"), py::arg("tol") = Tolerances{});
    m.def("dirac_slope", &channels::dirac_slope, py::arg("b"), py::arg("tol") = Tolerances{});

    // oracle
    py::class_<oracle::RadialGrid>(m, "RadialGrid")
        .def(py::init([](double T, int n) {
                 return oracle::RadialGrid{T, n};
             }),
             py::arg("T"), py::arg("n"))
        .def_readwrite("T", &oracle::RadialGrid::T)
        .def_readwrite("n", &oracle::RadialGrid::n)
        .def("adequate_for", &oracle::RadialGrid::adequate_for, py::arg("E"),
             py::arg("margin") = 6.0);
    m.def("oracle_count_below", &oracle::count_below, py::arg("channel_set"), py::arg("E"),
          py::arg("grid"));
    m.def("oracle_auto_grid", &oracle::auto_grid, py::arg("E"), py::arg("nu_max"));

    // bounds
    py::class_<bounds::SampledPotential>(m, "SampledPotential")
        .def_static("radial", &bounds::SampledPotential::radial, py::arg("V"), py::arg("r_max"),
                    py::arg("rings"))
        .def_static("radial_log", &bounds::SampledPotential::radial_log, py::arg("V"),
                    py::arg("r_min"), py::arg("r_max"), py::arg("rings"))
        .def_static("polar", &bounds::SampledPotential::polar, py::arg("V"), py::arg("r_max"),
                    py::arg("n_r"), py::arg("n_phi"))
        .def("value_at", &bounds::SampledPotential::value_at, py::arg("r"))
        .def_readonly("support_radius", &bounds::SampledPotential::support_radius);
    py::class_<bounds::RearrangedProfile>(m, "RearrangedProfile")
        .def("value_at_area", &bounds::RearrangedProfile::value_at_area, py::arg("area"))
        .def("total_area", &bounds::RearrangedProfile::total_area);
    py::enum_<bounds::RearrangementArg>(m, "RearrangementArg")
        .value("Area", bounds::RearrangementArg::Area)
        .value("Radius", bounds::RearrangementArg::Radius);
    py::class_<bounds::ShargorodskyTerms>(m, "ShargorodskyTerms")
        .def_readonly("I1", &bounds::ShargorodskyTerms::I1)
        .def_readonly("I2", &bounds::ShargorodskyTerms::I2);
    py::class_<bounds::HypothesisReport>(m, "HypothesisReport")
        .def_readonly("J_minus", &bounds::HypothesisReport::J_minus)
        .def_readonly("J_square", &bounds::HypothesisReport::J_square)
        .def_readonly("admissible", &bounds::HypothesisReport::admissible);
    py::class_<bounds::LineGrid>(m, "LineGrid")
        .def(py::init([](double t_min, double t_max, int n) {
                 return bounds::LineGrid{t_min, t_max, n};
             }),
             py::arg("t_min") = -12.0, py::arg("t_max") = 40.0, py::arg("n") = 10000)
        .def_readwrite("t_min", &bounds::LineGrid::t_min)
        .def_readwrite("t_max", &bounds::LineGrid::t_max)
        .def_readwrite("n", &bounds::LineGrid::n);
    m.def("decreasing_rearrangement", &bounds::decreasing_rearrangement, py::arg("V"));
    m.def("shargorodsky_functional", &bounds::shargorodsky_functional, py::arg("V"),
          py::arg("arg") = bounds::RearrangementArg::Area);
    m.def("hypothesis_check", &bounds::hypothesis_check, py::arg("s"),
          py::arg("arg") = bounds::RearrangementArg::Area);
    m.def("count_negative_radial", &bounds::count_negative_radial, py::arg("V"),
          py::arg("grid") = bounds::LineGrid{});
}
