#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "qrabi/crwa.hpp"
#include "qrabi/dynamics.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/model.hpp"
#include "qrabi/rwa.hpp"
#include "qrabi/spectrum.hpp"

namespace py = pybind11;
using namespace qrabi;

namespace {

CoherentField field_for(double alpha_sq, int n_cut) {
    const double alpha = std::sqrt(alpha_sq);
    if (n_cut < 0) n_cut = choose_truncation(alpha, 1e-12);
    return coherent_amplitudes(alpha, n_cut);
}

TimeSeries inversion_impl(const std::string& backend, double g, double alpha_sq,
                          double tau_max, int n_points, int n_cut) {
    const CoherentField field = field_for(alpha_sq, n_cut);
    const TimeGrid grid = reduced_time_grid(tau_max, n_points, g);
    if (backend == "rwa") return rwa::inversion(field, g, grid);
    if (backend == "crwa") return dynamics::crwa_inversion_full(field, g, grid).total;
    if (backend == "exact") {
        const exact::Eigensystem sys =
            exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, field.n_cut));
        return exact::inversion(sys, field, grid);
    }
    throw std::invalid_argument("backend must be rwa, crwa or exact");
}

}  // namespace

PYBIND11_MODULE(qrabi, m) {
    m.doc() = "Qubit-cavity dynamics: RWA, corrected RWA and exact diagonalization";

    m.def("coherent_betas",
          [](double alpha, int n_cut) { return coherent_amplitudes(alpha, n_cut).betas; },
          py::arg("alpha"), py::arg("n_cut"));
    m.def("tail_deficit",
          [](double alpha, int n_cut) { return coherent_amplitudes(alpha, n_cut).tail_deficit; },
          py::arg("alpha"), py::arg("n_cut"));
    m.def("choose_truncation", &choose_truncation, py::arg("alpha"), py::arg("tail_tol"));

    m.def("rwa_energy", &rwa::energy, py::arg("k"), py::arg("n"), py::arg("g"));
    m.def("rwa_state", &rwa::state, py::arg("k"), py::arg("n"));

    m.def("crwa_energy_closed", &crwa::energy_closed, py::arg("k"), py::arg("n"), py::arg("g"));
    m.def("crwa_energy_series", &crwa::energy_series, py::arg("k"), py::arg("n"), py::arg("g"));
    m.def("cubic_coefficients",
          [](int n, double g) {
              const crwa::Cubic c = crwa::cubic_coefficients(n, g);
              return py::make_tuple(c.a2, c.a1, c.a0);
          },
          py::arg("n"), py::arg("g"));
    m.def("cubic_roots", &crwa::cubic_roots, py::arg("n"), py::arg("g"));
    m.def("crwa_coefficients", &crwa::coefficients_series, py::arg("k"), py::arg("n"),
          py::arg("g"));
    m.def("ground_state_energy",
          [](double g, int order) { return crwa::ground_state(g, order).energy(); },
          py::arg("g"), py::arg("order") = 2);

    m.def("exact_energies",
          [](double g, int n_cut) {
              return exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, n_cut))
                  .energies;
          },
          py::arg("g"), py::arg("n_cut"));
    m.def("parity_labels",
          [](double g, int n_cut) {
              exact::Eigensystem sys =
                  exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, n_cut));
              return exact::parity_labels(sys);
          },
          py::arg("g"), py::arg("n_cut"));

    m.def("inversion",
          [](const std::string& backend, double g, double alpha_sq, double tau_max, int n_points,
             int n_cut) {
              const TimeSeries ts = inversion_impl(backend, g, alpha_sq, tau_max, n_points, n_cut);
              return py::make_tuple(ts.tau, ts.values);
          },
          py::arg("backend"), py::arg("g"), py::arg("alpha_sq"), py::arg("tau_max") = 40.0,
          py::arg("n_points") = 4001, py::arg("n_cut") = -1);

    m.def("crwa_components",
          [](double g, double alpha_sq, double tau_max, int n_points, int n_cut) {
              const CoherentField field = field_for(alpha_sq, n_cut);
              const TimeGrid grid = reduced_time_grid(tau_max, n_points, g);
              const dynamics::InversionComponents parts =
                  dynamics::crwa_inversion_full(field, g, grid);
              py::dict out;
              out["tau"] = grid.tau;
              out["constant"] = parts.constant;
              out["gs"] = parts.gs_term.values;
              out["rabi"] = parts.rabi.values;
              out["same_k"] = parts.same_k.values;
              out["diff_k"] = parts.diff_k.values;
              out["total"] = parts.total.values;
              return out;
          },
          py::arg("g"), py::arg("alpha_sq"), py::arg("tau_max") = 40.0, py::arg("n_points") = 4001,
          py::arg("n_cut") = -1);

    m.def("power_spectrum",
          [](const std::string& backend, double g, double alpha_sq, double bin, double freq_min,
             double freq_max, double dt, double t_total, int n_cut) {
              constexpr double pi = 3.14159265358979323846;
              if (t_total <= 0.0)
                  t_total = std::max(2.0 * pi / (bin * 2.0 * g),
                                     10.0 * pi * std::sqrt(alpha_sq) / g);
              const int n_points = static_cast<int>(std::lround(t_total / dt)) + 1;
              const TimeSeries ts =
                  inversion_impl(backend, g, alpha_sq, t_total * 2.0 * g, n_points, n_cut);
              const spectrum::SpectrumResult spec = spectrum::power_spectrum(
                  ts, spectrum::uniform_freq_grid(freq_min, freq_max, bin));
              return py::make_tuple(spec.freqs, spec.power);
          },
          py::arg("backend"), py::arg("g"), py::arg("alpha_sq"), py::arg("bin") = 0.1,
          py::arg("freq_min") = 0.5, py::arg("freq_max") = 25.0, py::arg("dt") = 0.02,
          py::arg("t_total") = 0.0, py::arg("n_cut") = -1);

    m.def("predict_peaks",
          [](double g, double alpha_sq) {
              py::dict out;
              for (const spectrum::PeakPrediction& p :
                   spectrum::predict_peaks_first_order(g, std::sqrt(alpha_sq)))
                  out[p.label.c_str()] = p.frequency;
              for (const spectrum::PeakPrediction& p :
                   spectrum::predict_peaks_second_order(g, std::sqrt(alpha_sq)))
                  out[p.label.c_str()] = p.frequency;
              return out;
          },
          py::arg("g"), py::arg("alpha_sq"));

    m.def("detect_peaks",
          [](const std::vector<double>& freqs, const std::vector<double>& power,
             double min_prominence) {
              spectrum::SpectrumResult spec;
              spec.freqs = freqs;
              spec.power = power;
              spec.g_ref = 1.0;
              py::list out;
              for (const spectrum::DetectedPeak& p :
                   spectrum::detect_peaks(spec, min_prominence)) {
                  py::dict d;
                  d["frequency"] = p.frequency;
                  d["height"] = p.height;
                  d["prominence"] = p.prominence;
                  d["half_width"] = p.half_width;
                  out.append(d);
              }
              return out;
          },
          py::arg("freqs"), py::arg("power"), py::arg("min_prominence") = 0.02);
}
