#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abcage/cls.hpp"
#include "abcage/dynamics.hpp"
#include "abcage/expm.hpp"
#include "abcage/lattice.hpp"
#include "abcage/presets.hpp"
#include "abcage/resonator.hpp"
#include "abcage/spectral.hpp"

namespace py = pybind11;
using namespace abcage;

PYBIND11_MODULE(_abcage, m) {
    m.doc() = "Spectra, compact localized states and exact dynamics of "
              "non-Hermitian Aharonov-Bohm cages";

    py::register_exception<InvalidParameter>(m, "InvalidParameterError",
                                             PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<IndexError>(m, "SiteIndexError", PyExc_IndexError);
    py::register_exception<UnsupportedRegime>(m, "UnsupportedRegimeError",
                                              PyExc_ValueError);
    py::register_exception<DegenerateBasis>(m, "DegenerateBasisError",
                                            PyExc_ValueError);
    py::register_exception<NoRealPeriod>(m, "NoRealPeriodError", PyExc_ValueError);
    py::register_exception<EigensolverError>(m, "EigensolverError",
                                             PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Boundary>(m, "Boundary")
        .value("Open", Boundary::Open)
        .value("Periodic", Boundary::Periodic);
    py::enum_<Sublattice>(m, "Sublattice")
        .value("A", Sublattice::A)
        .value("B", Sublattice::B);
    py::enum_<Branch>(m, "Branch")
        .value("Plus", Branch::Plus)
        .value("Minus", Branch::Minus);
    py::enum_<Leg>(m, "Leg").value("Upper", Leg::Upper).value("Lower", Leg::Lower);
    py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);
    py::enum_<PhaseAxis>(m, "PhaseAxis")
        .value("Phi1", PhaseAxis::Phi1)
        .value("Phi2", PhaseAxis::Phi2);

    py::class_<LatticeParams>(m, "LatticeParams")
        .def(py::init([](double J, double Gamma, double Phi1, double Phi2, int N,
                         Boundary boundary) {
                 LatticeParams p{J, Gamma, Phi1, Phi2, N, boundary};
                 p.validate();
                 return p;
             }),
             py::arg("J") = 1.0, py::arg("Gamma") = 0.0,
             py::arg("Phi1") = half_pi, py::arg("Phi2") = half_pi,
             py::arg("N") = 7, py::arg("boundary") = Boundary::Open)
        .def_readwrite("J", &LatticeParams::J)
        .def_readwrite("Gamma", &LatticeParams::Gamma)
        .def_readwrite("Phi1", &LatticeParams::Phi1)
        .def_readwrite("Phi2", &LatticeParams::Phi2)
        .def_readwrite("N", &LatticeParams::N)
        .def_readwrite("boundary", &LatticeParams::boundary)
        .def("validate", &LatticeParams::validate)
        .def_property_readonly("sites", &LatticeParams::sites);

    py::class_<SiteIndex>(m, "SiteIndex")
        .def(py::init<int, Sublattice>(), py::arg("cell"), py::arg("sub"))
        .def_readwrite("cell", &SiteIndex::cell)
        .def_readwrite("sub", &SiteIndex::sub)
        .def_property_readonly("flat", &SiteIndex::flat)
        .def_static("from_flat", &SiteIndex::from_flat, py::arg("flat"));

    m.def("build_cross_stitch", &build_cross_stitch, py::arg("params"));
    m.def("build_creutz", &build_creutz, py::arg("params"));
    m.def("bloch", &bloch, py::arg("params"), py::arg("k"));
    m.def("dimer_transform", &dimer_transform, py::arg("H"), py::arg("N"));

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def_readonly("right_eigenvectors", &Spectrum::right_eigenvectors)
        .def_readonly("defectiveness", &Spectrum::defectiveness)
        .def_readonly("residual", &Spectrum::residual);
    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("axis", &SweepResult::axis)
        .def_readonly("phases", &SweepResult::phases)
        .def_readonly("spectra", &SweepResult::spectra)
        .def_readonly("flatness", &SweepResult::flatness)
        .def_readonly("coalescence", &SweepResult::coalescence);

    m.def("eig", &eig, py::arg("H"));
    m.def("flatness", &flatness, py::arg("params"), py::arg("gridsize") = 101);
    m.def("band_energy_analytic", &band_energy_analytic, py::arg("params"));
    m.def("ep_defectiveness", &ep_defectiveness, py::arg("H"));
    m.def("sweep_phase", &sweep_phase, py::arg("params"), py::arg("which"),
          py::arg("count"));

    py::class_<CompactState>(m, "CompactState")
        .def_readonly("window_start", &CompactState::window_start)
        .def_readonly("amplitudes", &CompactState::amplitudes)
        .def_readonly("energy", &CompactState::energy)
        .def_readonly("alpha", &CompactState::alpha)
        .def_readonly("beta", &CompactState::beta)
        .def("embedded", &CompactState::embedded, py::arg("N"))
        .def("normalized_amplitudes", &CompactState::normalized_amplitudes);
    py::class_<CLSDecomposition>(m, "CLSDecomposition")
        .def_readonly("coefficients", &CLSDecomposition::coefficients)
        .def_readonly("basis", &CLSDecomposition::basis);

    m.def("build_cls", &build_cls, py::arg("params"), py::arg("cell"),
          py::arg("branch"));
    m.def("verify_cls", &verify_cls, py::arg("H"), py::arg("state"));
    m.def("decompose_single_site", &decompose_single_site, py::arg("params"),
          py::arg("site"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("site_intensity", &Trajectory::site_intensity)
        .def_readonly("total_intensity", &Trajectory::total_intensity)
        .def_readonly("normalized", &Trajectory::normalized)
        .def("normalized_copy", &Trajectory::normalized_copy);
    py::class_<SiteInterval>(m, "SiteInterval")
        .def_readonly("lo", &SiteInterval::lo)
        .def_readonly("hi", &SiteInterval::hi)
        .def_readonly("empty", &SiteInterval::empty)
        .def_property_readonly("size", &SiteInterval::size);
    py::class_<EdgeState>(m, "EdgeState")
        .def_readonly("state", &EdgeState::state)
        .def_readonly("energy", &EdgeState::energy)
        .def_readonly("residual", &EdgeState::residual);

    m.def("evolve", &evolve, py::arg("H"), py::arg("psi0"), py::arg("times"));
    m.def("analytic_single_site", &analytic_single_site, py::arg("params"),
          py::arg("leg"), py::arg("t"));
    m.def("embed_window", &embed_window, py::arg("window"), py::arg("cell"),
          py::arg("N"));
    m.def("period", &period, py::arg("params"));
    m.def("confinement_region", &confinement_region, py::arg("trajectory"),
          py::arg("threshold") = 1e-10);
    m.def("edge_state", &edge_state, py::arg("params"), py::arg("side"));
    m.def("edge_intensity", &edge_intensity, py::arg("params"), py::arg("side"),
          py::arg("t"));
    m.def("matrix_exponential", &matrix_exponential, py::arg("A"));

    py::class_<ResonatorParams>(m, "ResonatorParams")
        .def(py::init([](double kappa, double gamma, double gain, double delta) {
                 ResonatorParams p{kappa, gamma, gain, delta};
                 p.validate();
                 return p;
             }),
             py::arg("kappa") = 0.1, py::arg("gamma") = 10.0,
             py::arg("gain") = 0.0, py::arg("delta") = pi)
        .def_readwrite("kappa", &ResonatorParams::kappa)
        .def_readwrite("gamma", &ResonatorParams::gamma)
        .def_readwrite("gain", &ResonatorParams::gain)
        .def_readwrite("delta", &ResonatorParams::delta)
        .def_property_readonly("gamma_eff", &ResonatorParams::gamma_eff)
        .def_property_readonly("regime_valid", &ResonatorParams::regime_valid);
    py::class_<ReductionResult>(m, "ReductionResult")
        .def_readonly("max_error", &ReductionResult::max_error)
        .def_readonly("regime_warning", &ReductionResult::regime_warning);

    m.def("full_three_mode", &full_three_mode, py::arg("params"));
    m.def("effective_two_mode", &effective_two_mode, py::arg("params"));
    m.def("reduction_error", &reduction_error, py::arg("params"),
          py::arg("horizon"), py::arg("samples") = 200);

    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("params", &Preset::params)
        .def_readonly("psi0", &Preset::psi0);
    m.def("resolve_preset", &resolve_preset, py::arg("name"), py::arg("fallback"));
}
