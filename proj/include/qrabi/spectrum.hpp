#pragma once

#include <string>
#include <vector>

#include "qrabi/model.hpp"

namespace qrabi::spectrum {

// |integral_0^T W(t) e^{-i w t} dt|^2 on a frequency grid in units of 2g.
struct SpectrumResult {
    std::vector<double> freqs;  // 2g units, strictly increasing
    std::vector<double> power;
    double duration = 0.0;      // T, absolute time
    double bin_width = 0.0;     // 2*pi/T converted to 2g units
    double g_ref = 0.0;
};

// Trapezoid quadrature over the sampled window, rectangular windowing.
// Requires uniform sampling, a Nyquist rate above max(freqs) in absolute
// units, and a grid no finer than the 2*pi/T resolution.
SpectrumResult power_spectrum(const TimeSeries& series, const std::vector<double>& freqs_2g);

std::vector<double> uniform_freq_grid(double f_min, double f_max, double step);

struct PeakPrediction {
    std::string label;
    double frequency = 0.0;  // 2g units
    int order = 1;
};

// rabi = sqrt(alpha^2+1),
// omega_k^s = [2 - g^2/2 + (-1)^k g (sqrt(a^2+3) - sqrt(a^2+1))]/(2g),
// omega_k^d = [2 - g^2/2 + (-1)^k g (sqrt(a^2+3) + sqrt(a^2+1))]/(2g),
// omega_c = (1 - g^2/4)/g.
std::vector<PeakPrediction> predict_peaks_first_order(double g, double alpha);

// Omega_k^s = [4 - g^2 + (-1)^k g (sqrt(a^2+5) - sqrt(a^2+1))]/(2g),
// Omega_k^d = [4 - g^2 + (-1)^k g (sqrt(a^2+5) + sqrt(a^2+1))]/(2g).
// The closed-root level energies stand in for the uncorrected ones here.
std::vector<PeakPrediction> predict_peaks_second_order(double g, double alpha);

// Intrinsic oscillations of the next corrections:
//   order 2: g^2 a^2 sum_{k,k'} sum_n beta_n^2/sqrt(n+3) cos[(E_{k,n+4} - E_{k',n}) t]
//   order 3: g^3 a^2 sum_{k,k'} sum_n beta_n^2/sqrt(n+5) cos[(E_{k,n+6} - E_{k',n}) t]
TimeSeries higher_order_components(const CoherentField& field, double g,
                                   const TimeGrid& grid, int order);

struct DetectedPeak {
    double frequency = 0.0;   // 2g units
    double height = 0.0;
    double prominence = 0.0;  // absolute, same units as power
    double half_width = 0.0;  // FWHM above the higher bounding saddle
    std::size_t index = 0;
};

// Local maxima with prominence >= min_prominence * max(power). Plateaus
// resolve to their lowest-frequency sample.
std::vector<DetectedPeak> detect_peaks(const SpectrumResult& spec, double min_prominence);

}  // namespace qrabi::spectrum
