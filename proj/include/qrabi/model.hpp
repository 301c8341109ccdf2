#pragma once

#include <cstddef>
#include <vector>

namespace qrabi {

// Cavity frequency omega is the energy unit and is fixed to 1 throughout.
struct ModelParams {
    double g = 0.0;           // qubit-cavity coupling, units of omega
    double delta_atom = 1.0;  // atomic transition frequency
    static constexpr double omega = 1.0;

    double detuning() const { return delta_atom - omega; }
};

// Coherent field |alpha> truncated to the number states 0..n_cut.
// betas[n] are the Poisson amplitudes; tail_deficit = 1 - sum betas^2.
struct CoherentField {
    double alpha = 0.0;
    double mean_photons = 0.0;
    std::vector<double> betas;
    int n_cut = 0;
    double tail_deficit = 0.0;
};

// Uniform grid in reduced time tau = 2*g_ref*t.
struct TimeGrid {
    std::vector<double> tau;
    double g_ref = 0.0;

    std::size_t size() const { return tau.size(); }
    double t(std::size_t i) const { return tau[i] / (2.0 * g_ref); }
};

struct TimeSeries {
    std::vector<double> tau;
    std::vector<double> values;
    double g_ref = 0.0;
};

// Amplitudes via the multiplicative recurrence beta_{n+1} = beta_n*alpha/sqrt(n+1),
// which stays finite where factorials would overflow.
CoherentField coherent_amplitudes(double alpha, int n_cut);

// Smallest N with sum_{n>N} beta_n^2 < tail_tol, verified by summation.
int choose_truncation(double alpha, double tail_tol);

TimeGrid reduced_time_grid(double tau_max, int n_points, double g);

}  // namespace qrabi
