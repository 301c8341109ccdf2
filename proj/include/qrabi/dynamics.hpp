#pragma once

#include <complex>
#include <vector>

#include "qrabi/model.hpp"

namespace qrabi::dynamics {

// Per-n weights of the analytic inversion, built from the closed forms
//   f_kn = beta_n [ 1/2 + (-1)^k (n - 2a^2 + 2) g / (8 sqrt(n+1)) - a^2 g^2/8 ]
//   h_kn = beta_n [ -(-1)^k sqrt(n+2) g/4 + sqrt((n+2)/(n+1)) (a^2 - n - 1) g^2/8 ]
// (a^2 = alpha^2) and their combinations
//   R_n = 2(f_1n f_2n + h_1n h_2n),  I_1n = 2 h_1n f_1,n+2,  I_2n = 2 h_2n f_2,n+2,
//   I_12n = 2 h_1n f_2,n+2,  I_21n = 2 h_2n f_1,n+2,
//   C = sum_kn (f_kn^2 + h_kn^2),  S_k = 2 f_k1 d_1^2 beta_1.
struct InversionCoefficients {
    std::vector<double> f1, f2;    // n = 0..n_cut+2
    std::vector<double> h1, h2;    // n = 0..n_cut
    std::vector<double> R, I1, I2, I12, I21;
    double C = 0.5;
    double S1 = 0.0, S2 = 0.0;
};

InversionCoefficients compute_coefficients(const CoherentField& field, double g);

// W(t) split into its additive parts. total = constant + gs + rabi + same_k + diff_k
// pointwise by construction; total(0) = 1 - g^2 alpha^2 up to the truncation
// tail and O(g^4).
struct InversionComponents {
    double constant = 0.0;  // 2C - 1, closed form
    TimeSeries gs_term;     // ground-state cross term, closed product-of-cosines form
    TimeSeries rabi;        // 2 sum_n R_n cos[(E_2n - E_1n) t]
    TimeSeries same_k;      // transitions (k,n) <-> (k,n+2)
    TimeSeries diff_k;      // transitions (k,n) <-> (k'!=k,n+2)
    TimeSeries total;
};

// Full analytic inversion; level energies inside the cosines come from the
// closed cubic roots for every g.
InversionComponents crwa_inversion_full(const CoherentField& field, double g,
                                        const TimeGrid& grid);

// Order-g form with closed-form energy differences
//   E_2n - E_1n            = 2 sqrt(n+1) g
//   E_{k,n+2} - E_{k,n}    = 2 - g^2/2 + (-1)^k g (sqrt(n+3) - sqrt(n+1))
//   E_{k,n+2} - E_{k'!=k,n} = 2 - g^2/2 + (-1)^k g (sqrt(n+3) + sqrt(n+1))
TimeSeries crwa_inversion_concise(const CoherentField& field, double g,
                                  const TimeGrid& grid);

// Regrouped order-g intrinsic sums and their single-mode / Gaussian
// approximants. All vanish at t = 0.
TimeSeries envelope_same_k(const CoherentField& field, double g, const TimeGrid& grid);
TimeSeries envelope_same_k_approx(const CoherentField& field, double g, const TimeGrid& grid);
TimeSeries envelope_diff_k(const CoherentField& field, double g, const TimeGrid& grid);
TimeSeries envelope_diff_k_approx(const CoherentField& field, double g, const TimeGrid& grid);

// Stationary-phase evaluation of
//   F(t) = sum_n (beta_n^2/sqrt(n+1)) sin[g (sqrt(n+1)+sqrt(n+3)) t]
// for n_bar >> 1:  F(t) ~= (1/sqrt(n_bar)) sin(2 g sqrt(n_bar) t) exp(-(gt)^2/2).
// Derivation sketch: Stirling turns the Poisson weight into
//   F(t) = e^{-n_bar} Im int_0^inf dn exp[n_bar S(n)] / sqrt(2 pi n (n+1)),
//   S(n) = n/n_bar - (n/n_bar) ln(n/n_bar) + i (sqrt(n+1)+sqrt(n+3)) g t / n_bar.
// S'(n_0) = 0 at the complex point n_0 ~= n_bar (1 + i g t / sqrt(n_bar)) for
// g t / sqrt(n_bar) << 1; the Gaussian fluctuation factor around n_0 supplies
// the exp(-(gt)^2/2) decay. Diagnostics expose n_0 per sample;
// outside_validity flags g*t > sqrt(n_bar), where the short-time expansion of
// the saddle location no longer applies.
struct SaddlePointDiagnostics {
    std::vector<std::complex<double>> saddle_points;
    bool outside_validity = false;
};

TimeSeries saddle_point_envelope(double n_bar, double g, const TimeGrid& grid,
                                 SaddlePointDiagnostics* diag = nullptr);

// plateau_amplitude = max|W| over tau in [0.4, 0.6]*2*pi*alpha,
// revival_amplitude = max|W| over tau in [0.85, 1.15]*2*pi*alpha,
// intrinsic_ratio = plateau_amplitude / (g*alpha).
struct CollapseMetrics {
    double plateau_amplitude = 0.0;
    double revival_amplitude = 0.0;
    double intrinsic_ratio = 0.0;
};

CollapseMetrics collapse_metrics(const TimeSeries& series, double g, double alpha);

// Minimum over sliding windows [a, a+width] inside [tau_lo, tau_hi] of the
// window amplitude (max - min)/2. Window starts step through the grid.
double min_window_amplitude(const TimeSeries& series, double tau_lo, double tau_hi,
                            double width);

}  // namespace qrabi::dynamics
