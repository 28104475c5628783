#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deit/blockade.hpp"
#include "deit/catlab.hpp"
#include "deit/dressed.hpp"
#include "deit/eit.hpp"
#include "deit/stateops.hpp"

namespace py = pybind11;
using namespace deit;

PYBIND11_MODULE(_deitlab, m) {
    m.doc() = "double-EIT cross-Kerr laboratory bindings";

    py::register_exception<deit::Error>(m, "DeitError");

    // fockspace
    py::class_<fock::MultiModeState>(m, "MultiModeState")
        .def_property_readonly("cutoffs", &fock::MultiModeState::cutoffs)
        .def_property_readonly("amplitudes",
                               [](const fock::MultiModeState& s) { return s.amplitudes(); })
        .def("norm", &fock::MultiModeState::norm)
        .def("lost_weight", &fock::MultiModeState::lost_weight);

    py::class_<fock::DensityOperator>(m, "DensityOperator")
        .def_property_readonly("cutoffs", &fock::DensityOperator::cutoffs)
        .def_property_readonly("matrix",
                               [](const fock::DensityOperator& r) { return r.matrix(); })
        .def("purity", &fock::DensityOperator::purity);

    m.def("coherent_state", &fock::coherent_state, py::arg("alpha"), py::arg("cutoff"));
    m.def("coherent_cutoff", &fock::coherent_cutoff, py::arg("alpha"));
    m.def("basis_state", &fock::basis_state, py::arg("occupations"), py::arg("cutoffs"));
    m.def("tensor", &fock::tensor, py::arg("factors"));
    m.def("overlap", &fock::overlap);
    m.def("to_density", &fock::to_density);
    m.def("partial_trace", &fock::partial_trace, py::arg("rho"), py::arg("keep"));
    m.def(
        "expectation",
        [](const fock::MultiModeState& s, const std::string& name, int m1, int m2) {
            return fock::expectation(s, name, m1, m2);
        },
        py::arg("state"), py::arg("name"), py::arg("mode") = 0, py::arg("mode2") = -1);

    // channels
    m.def("cross_kerr", &ops::cross_kerr, py::arg("state"), py::arg("mode_a"), py::arg("mode_b"),
          py::arg("phi"));
    m.def("beam_splitter", &ops::beam_splitter, py::arg("state"), py::arg("mode_a"),
          py::arg("mode_c"));
    m.def("loss_channel", &ops::loss_channel, py::arg("rho"), py::arg("mode"), py::arg("eta"));

    // cat laboratory
    py::enum_<catlab::Parity>(m, "Parity")
        .value("Even", catlab::Parity::Even)
        .value("Odd", catlab::Parity::Odd);
    m.def("cat_state", &catlab::cat_state, py::arg("gamma"), py::arg("parity"), py::arg("cutoff"));
    m.def("make_entangled_coherent", &catlab::make_entangled_coherent, py::arg("alpha"),
          py::arg("gamma"), py::arg("cutoffs"));
    m.def("split_cat_density", &catlab::split_cat_density, py::arg("gamma"), py::arg("c"),
          py::arg("cutoffs"));
    m.def(
        "duan_S",
        [](double gamma, double c, double eta, int cutoff) {
            if (cutoff <= 0) cutoff = fock::coherent_cutoff(gamma / std::sqrt(2.0));
            const auto r =
                catlab::duan_S(catlab::split_cat_density(gamma, c, {cutoff, cutoff}), eta);
            return py::make_tuple(r.S, r.var_u, r.var_v, r.inseparable);
        },
        py::arg("gamma"), py::arg("c") = 1.0, py::arg("eta") = 1.0, py::arg("cutoff") = 0,
        "Returns (S, var_u, var_v, inseparable) for the split-cat family");

    // dressed states
    py::class_<dressed::DressedSpectrum>(m, "DressedSpectrum")
        .def_readonly("omega", &dressed::DressedSpectrum::omega)
        .def_readonly("delta_small", &dressed::DressedSpectrum::delta_small)
        .def_readonly("eigenvalues", &dressed::DressedSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &dressed::DressedSpectrum::eigenvectors)
        .def_readonly("dark_state", &dressed::DressedSpectrum::dark_state);
    m.def("dressed_spectrum", &dressed::dressed_spectrum, py::arg("n_a"), py::arg("n_b"),
          py::arg("g_a"), py::arg("g_b"), py::arg("omega_d"));
    m.def("dressed_hamiltonian5", &dressed::dressed_hamiltonian5);

    // medium constants
    py::class_<eit::MediumParams>(m, "MediumParams")
        .def(py::init<>())
        .def_readwrite("gamma", &eit::MediumParams::gamma)
        .def_readwrite("Delta", &eit::MediumParams::Delta)
        .def_readwrite("Omega_d", &eit::MediumParams::Omega_d)
        .def_readwrite("d24", &eit::MediumParams::d24)
        .def_readwrite("d26", &eit::MediumParams::d26)
        .def_readwrite("N_density", &eit::MediumParams::N_density)
        .def_readwrite("V", &eit::MediumParams::V)
        .def_readwrite("L", &eit::MediumParams::L);
    py::class_<eit::PropagationConstants>(m, "PropagationConstants")
        .def_readonly("sigma0_a", &eit::PropagationConstants::sigma0_a)
        .def_readonly("v_group", &eit::PropagationConstants::v_group)
        .def_readonly("chi", &eit::PropagationConstants::chi)
        .def("pi_over_chi", &eit::PropagationConstants::pi_over_chi);
    m.def("propagation_constants", &eit::propagation_constants);
    m.def(
        "lambda_branch",
        [](double oa, double ob, const eit::MediumParams& p) {
            const auto lb = eit::lambda_branch(oa, ob, p);
            return py::make_tuple(lb.lambda_exact, lb.lambda_weakfield);
        },
        py::arg("omega_a_rabi"), py::arg("omega_b_rabi"), py::arg("medium"));

    // blockade
    py::class_<blockade::CavityParams>(m, "CavityParams")
        .def(py::init<>())
        .def_readwrite("g_a", &blockade::CavityParams::g_a)
        .def_readwrite("g_b", &blockade::CavityParams::g_b)
        .def_readwrite("Omega_d", &blockade::CavityParams::Omega_d)
        .def_readwrite("Delta", &blockade::CavityParams::Delta)
        .def_readwrite("gamma", &blockade::CavityParams::gamma)
        .def_readwrite("Gamma", &blockade::CavityParams::Gamma)
        .def_readwrite("delta", &blockade::CavityParams::delta)
        .def_readwrite("eps_pump", &blockade::CavityParams::eps_pump)
        .def_readwrite("N_atoms", &blockade::CavityParams::N_atoms);
    m.def(
        "blockade_spectrum_scan",
        [](const blockade::CavityParams& p, const std::vector<double>& grid, int n_atoms,
           double delta) {
            const auto scan = blockade::blockade_spectrum_scan(p, grid, n_atoms, delta);
            return py::make_tuple(scan.g_b, scan.eigenvalues, scan.gap);
        },
        py::arg("params"), py::arg("g_b_grid"), py::arg("n_atoms") = 1, py::arg("delta") = 0.0,
        "Returns (g_b, eigenvalues per point, min |Re E| per point)");
    m.def("steady_population", &blockade::steady_population, py::arg("rabi"), py::arg("detuning"),
          py::arg("gamma"));
    m.def(
        "five_level_dynamics",
        [](const blockade::CavityParams& p, const std::vector<double>& ts) {
            const auto d = blockade::five_level_dynamics(p, ts);
            return py::make_tuple(d.populations, d.max_c2, d.max_c4, d.max_c5, d.omega_r,
                                  d.measured_frequency);
        },
        py::arg("params"), py::arg("t_grid"));
}
