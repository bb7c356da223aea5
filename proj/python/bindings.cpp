#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deltabox/cli.hpp"
#include "deltabox/eigenfunction.hpp"
#include "deltabox/errors.hpp"
#include "deltabox/factorize.hpp"
#include "deltabox/oracle.hpp"
#include "deltabox/quantize.hpp"
#include "deltabox/verify.hpp"

namespace py = pybind11;
using namespace deltabox;

namespace {

// Scalar in, scalar out; array in, array of the same shape out.
template <class F>
py::object map_array(F&& f, const py::object& x) {
    if (py::isinstance<py::float_>(x) || py::isinstance<py::int_>(x)) return py::float_(f(x.cast<double>()));
    auto in = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(x);
    if (!in) throw py::type_error("expected a float or an array of floats");
    py::array_t<double> out(std::vector<py::ssize_t>(in.shape(), in.shape() + in.ndim()));
    const double* src = in.data();
    double* dst = out.mutable_data();
    for (py::ssize_t i = 0; i < in.size(); ++i) dst[i] = f(src[i]);
    return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_deltabox, m) {
    m.doc() = "Particle in a box with a delta spike: spectra, eigenfunctions, ladder operators.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<RangeError>(m, "RangeError", error);
    py::register_exception<AttractiveCouplingUnsupported>(m, "AttractiveCouplingUnsupported", error);
    py::register_exception<SearchCeilingExceeded>(m, "SearchCeilingExceeded", error);
    py::register_exception<NotAnEigenvalue>(m, "NotAnEigenvalue", error);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<PoleError>(m, "PoleError", error);
    py::register_exception<GridTooCoarse>(m, "GridTooCoarse", error);
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", error);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init(&SystemConfig::make), py::arg("hbar"), py::arg("mass"), py::arg("a"),
             py::arg("lam"), py::arg("p"))
        .def_static("from_coupling", &SystemConfig::from_coupling, py::arg("a"), py::arg("p"),
                    py::arg("g"), py::arg("hbar") = 1.0, py::arg("mass") = 1.0)
        .def_property_readonly("hbar", &SystemConfig::hbar)
        .def_property_readonly("mass", &SystemConfig::mass)
        .def_property_readonly("a", &SystemConfig::box_length)
        .def_property_readonly("lam", &SystemConfig::lambda)
        .def_property_readonly("p", &SystemConfig::fraction)
        .def_property_readonly("delta_position", &SystemConfig::delta_position)
        .def_property_readonly("coupling", &SystemConfig::coupling)
        .def_property_readonly("ladder_jump", &SystemConfig::ladder_jump)
        .def("energy_of", &SystemConfig::energy_of)
        .def("k_of", &SystemConfig::k_of)
        .def(py::self == py::self)
        .def("__repr__", [](const SystemConfig& c) {
            std::ostringstream os;
            os << "SystemConfig(hbar=" << c.hbar() << ", mass=" << c.mass() << ", a=" << c.box_length()
               << ", lam=" << c.lambda() << ", p=" << c.fraction() << ")";
            return os.str();
        });

    py::class_<EigenLevel>(m, "EigenLevel")
        .def_readonly("n", &EigenLevel::n)
        .def_readonly("k", &EigenLevel::k)
        .def_readonly("energy", &EigenLevel::energy)
        .def("__repr__", [](const EigenLevel& l) {
            std::ostringstream os;
            os.precision(17);
            os << "EigenLevel(n=" << l.n << ", k=" << l.k << ", energy=" << l.energy << ")";
            return os.str();
        });
    m.def("make_level", &make_level, py::arg("config"), py::arg("n"), py::arg("k"));

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("config", &Spectrum::config)
        .def_readonly("levels", &Spectrum::levels)
        .def("level", &Spectrum::level, py::return_value_policy::copy)
        .def("wave_numbers", &Spectrum::wave_numbers)
        .def("energies", &Spectrum::energies)
        .def("__len__", &Spectrum::size);

    py::class_<quantize::SolverSettings>(m, "SolverSettings")
        .def(py::init<>())
        .def_readwrite("scan_step_divisor", &quantize::SolverSettings::scan_step_divisor)
        .def_readwrite("k_tolerance", &quantize::SolverSettings::k_tolerance)
        .def_readwrite("max_k", &quantize::SolverSettings::max_k);

    m.def(
        "residual",
        [](const SystemConfig& c, const py::object& k) {
            return map_array([&](double v) { return quantize::residual(c, v); }, k);
        },
        py::arg("config"), py::arg("k"));
    m.def(
        "scaled_residual",
        [](const SystemConfig& c, const py::object& k) {
            return map_array([&](double v) { return quantize::scaled_residual(c, v); }, k);
        },
        py::arg("config"), py::arg("k"));
    m.def("solve_spectrum", &quantize::solve_spectrum, py::arg("config"), py::arg("n_levels"),
          py::arg("settings") = quantize::SolverSettings{});
    m.def("weak_coupling_spectrum", &quantize::weak_coupling_spectrum);
    m.def("strong_coupling_spectrum", &quantize::strong_coupling_spectrum);

    py::class_<PiecewiseWave>(m, "PiecewiseWave")
        .def_property_readonly("k", &PiecewiseWave::k)
        .def_property_readonly("left_amplitude", &PiecewiseWave::left_amplitude)
        .def_property_readonly("right_amplitude", &PiecewiseWave::right_amplitude)
        .def("__call__", [](const PiecewiseWave& w, const py::object& x) { return map_array([&](double v) { return w(v); }, x); })
        .def("derivative_jump", &PiecewiseWave::derivative_jump)
        .def("value_at_joint", &PiecewiseWave::value_at_joint)
        .def("norm_squared", &PiecewiseWave::norm_squared);
    m.def("build_wave", &eigenfunction::build_wave, py::arg("config"), py::arg("level"),
          py::arg("tolerance") = 1e-8);
    m.def("with_left_amplitude", &eigenfunction::with_left_amplitude);
    m.def("inner_product", &eigenfunction::inner_product, py::arg("lhs"), py::arg("rhs"),
          py::arg("panels") = 2048);
    m.def("count_interior_nodes", &eigenfunction::count_interior_nodes, py::arg("wave"),
          py::arg("samples") = 20000);

    py::class_<factorize::LadderFunction>(m, "LadderFunction")
        .def_property_readonly("shift", &factorize::LadderFunction::shift)
        .def("__call__", [](const factorize::LadderFunction& f, const py::object& x) { return map_array([&](double v) { return f(v); }, x); })
        .def("jump", &factorize::LadderFunction::jump)
        .def("joint_is_singular", &factorize::LadderFunction::joint_is_singular,
             py::arg("tolerance") = 1e-9);
    m.def("build_ladder", &factorize::build_ladder, py::arg("config"), py::arg("level"),
          py::arg("tolerance") = 1e-9);
    py::class_<factorize::RootFunction>(m, "RootFunction")
        .def_property_readonly("k", &factorize::RootFunction::k)
        .def_property_readonly("shift", &factorize::RootFunction::shift)
        .def("__call__", [](const factorize::RootFunction& r, const py::object& x) { return map_array([&](double v) { return r(v); }, x); });
    m.def("root_function", &factorize::root_function);
    m.def("ladder_jump_residual", &factorize::ladder_jump_residual);
    m.def("riccati_residual", &factorize::riccati_residual);

    py::class_<factorize::ChainStep>(m, "ChainStep")
        .def_readonly("n", &factorize::ChainStep::n)
        .def_readonly("c", &factorize::ChainStep::c)
        .def_readonly("d", &factorize::ChainStep::d)
        .def_readonly("energy", &factorize::ChainStep::energy);
    py::class_<factorize::PlainBoxChain>(m, "PlainBoxChain")
        .def_readonly("steps", &factorize::PlainBoxChain::steps);
    m.def("plain_box_chain", &factorize::plain_box_chain);

    m.def(
        "oracle_energies",
        [](const SystemConfig& c, int n_interior, int m_levels) {
            return oracle::polished_eigenvalues(oracle::discretize(c, n_interior), m_levels);
        },
        py::arg("config"), py::arg("n_interior"), py::arg("levels"));

    py::class_<oracle::ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("n_interior", &oracle::ConvergenceRow::n_interior)
        .def_readonly("dx", &oracle::ConvergenceRow::dx)
        .def_readonly("energies", &oracle::ConvergenceRow::energies)
        .def_readonly("abs_error", &oracle::ConvergenceRow::abs_error);
    py::class_<oracle::ConvergenceStudy>(m, "ConvergenceStudy")
        .def_readonly("reference", &oracle::ConvergenceStudy::reference)
        .def_readonly("rows", &oracle::ConvergenceStudy::rows)
        .def_readonly("observed_order", &oracle::ConvergenceStudy::observed_order)
        .def_readonly("fitted_order", &oracle::ConvergenceStudy::fitted_order);
    m.def(
        "convergence_study",
        [](const SystemConfig& c, int levels, const std::vector<int>& grids) {
            return oracle::convergence_study(c, levels, grids);
        },
        py::arg("config"), py::arg("levels"), py::arg("grid_sizes"));

    py::class_<verify::Check>(m, "Check")
        .def_readonly("name", &verify::Check::name)
        .def_readonly("passed", &verify::Check::passed)
        .def_readonly("measured", &verify::Check::measured)
        .def_readonly("tolerance", &verify::Check::tolerance)
        .def_readonly("detail", &verify::Check::detail);
    py::class_<verify::Report>(m, "Report")
        .def_readonly("checks", &verify::Report::checks)
        .def_property_readonly("passed", &verify::Report::passed);
    m.def(
        "verify",
        [](const Spectrum& s, std::optional<double> inject_k) {
            verify::Options o;
            o.inject_k = inject_k;
            return verify::run(s, o);
        },
        py::arg("spectrum"), py::arg("inject_k") = py::none());

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
    m.attr("__version__") = cli::version();
}
