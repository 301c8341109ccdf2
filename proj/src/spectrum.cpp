#include "qrabi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qrabi/crwa.hpp"

namespace qrabi::spectrum {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> uniform_freq_grid(double f_min, double f_max, double step) {
    if (step <= 0.0 || f_max < f_min) throw std::invalid_argument("uniform_freq_grid: bad range");
    std::vector<double> freqs;
    const int count = static_cast<int>(std::floor((f_max - f_min) / step + 1e-9)) + 1;
    freqs.reserve(count);
    for (int i = 0; i < count; ++i) freqs.push_back(f_min + step * i);
    return freqs;
}

SpectrumResult power_spectrum(const TimeSeries& series, const std::vector<double>& freqs_2g) {
    const std::size_t n = series.tau.size();
    if (n < 2) throw std::invalid_argument("power_spectrum: series too short");
    if (series.g_ref <= 0.0) throw std::invalid_argument("power_spectrum: series needs g_ref > 0");
    if (freqs_2g.empty()) throw std::invalid_argument("power_spectrum: empty frequency grid");

    const double g = series.g_ref;
    const double dt = (series.tau[1] - series.tau[0]) / (2.0 * g);
    for (std::size_t i = 1; i < n; ++i) {
        const double step = (series.tau[i] - series.tau[i - 1]) / (2.0 * g);
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::invalid_argument("power_spectrum: series must be uniformly sampled");
    }

    const double duration = (series.tau.back() - series.tau.front()) / (2.0 * g);
    const double bin_width = 2.0 * kPi / duration / (2.0 * g);
    const double nyquist_abs = kPi / dt;

    double min_spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < freqs_2g.size(); ++i) {
        if (freqs_2g[i] <= freqs_2g[i - 1])
            throw std::invalid_argument("power_spectrum: frequency grid must increase");
        min_spacing = std::min(min_spacing, freqs_2g[i] - freqs_2g[i - 1]);
    }
    if (freqs_2g.back() * 2.0 * g > nyquist_abs)
        throw std::invalid_argument("power_spectrum: frequency grid exceeds the Nyquist rate");
    if (freqs_2g.size() > 1 && min_spacing < bin_width * (1.0 - 1e-9))
        throw std::invalid_argument("power_spectrum: grid finer than the 2*pi/T resolution");

    SpectrumResult out;
    out.freqs = freqs_2g;
    out.power.resize(freqs_2g.size());
    out.duration = duration;
    out.bin_width = bin_width;
    out.g_ref = g;

    for (std::size_t fi = 0; fi < freqs_2g.size(); ++fi) {
        const double omega = freqs_2g[fi] * 2.0 * g;
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = series.tau[i] / (2.0 * g);
            const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            re += w * series.values[i] * std::cos(omega * t);
            im -= w * series.values[i] * std::sin(omega * t);
        }
        re *= dt;
        im *= dt;
        out.power[fi] = re * re + im * im;
    }
    return out;
}

std::vector<PeakPrediction> predict_peaks_first_order(double g, double alpha) {
    if (g <= 0.0) throw std::invalid_argument("predict_peaks_first_order: g must be > 0");
    const double a2 = alpha * alpha;
    const double narrow = std::sqrt(a2 + 3.0) - std::sqrt(a2 + 1.0);
    const double wide = std::sqrt(a2 + 3.0) + std::sqrt(a2 + 1.0);
    const double carrier = 2.0 - 0.5 * g * g;
    return {
        {"rabi", std::sqrt(a2 + 1.0), 1},
        {"omega_s_k1", (carrier - g * narrow) / (2.0 * g), 1},
        {"omega_s_k2", (carrier + g * narrow) / (2.0 * g), 1},
        {"omega_d_k1", (carrier - g * wide) / (2.0 * g), 1},
        {"omega_d_k2", (carrier + g * wide) / (2.0 * g), 1},
        {"omega_c", (1.0 - 0.25 * g * g) / g, 1},
    };
}

std::vector<PeakPrediction> predict_peaks_second_order(double g, double alpha) {
    if (g <= 0.0) throw std::invalid_argument("predict_peaks_second_order: g must be > 0");
    const double a2 = alpha * alpha;
    const double narrow = std::sqrt(a2 + 5.0) - std::sqrt(a2 + 1.0);
    const double wide = std::sqrt(a2 + 5.0) + std::sqrt(a2 + 1.0);
    const double carrier = 4.0 - g * g;
    return {
        {"Omega_s_k1", (carrier - g * narrow) / (2.0 * g), 2},
        {"Omega_s_k2", (carrier + g * narrow) / (2.0 * g), 2},
        {"Omega_d_k1", (carrier - g * wide) / (2.0 * g), 2},
        {"Omega_d_k2", (carrier + g * wide) / (2.0 * g), 2},
    };
}

TimeSeries higher_order_components(const CoherentField& field, double g,
                                   const TimeGrid& grid, int order) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("higher_order_components: order must be 2 or 3");
    const int hop = order == 2 ? 4 : 6;           // photon-number jump n -> n+hop
    const double root_shift = order == 2 ? 3.0 : 5.0;
    const double prefactor = std::pow(g, order) * field.mean_photons;
    const int n_cut = field.n_cut;

    std::vector<double> e1(n_cut + hop + 1), e2(n_cut + hop + 1);
    for (int n = 0; n <= n_cut + hop; ++n) {
        e1[n] = crwa::energy_closed(1, n, g);
        e2[n] = crwa::energy_closed(2, n, g);
    }

    TimeSeries out{grid.tau, std::vector<double>(grid.size(), 0.0), grid.g_ref};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double acc = 0.0;
        for (int n = 0; n <= n_cut; ++n) {
            const double weight =
                field.betas[n] * field.betas[n] / std::sqrt(n + root_shift);
            acc += weight * (std::cos((e1[n + hop] - e1[n]) * t) +
                             std::cos((e1[n + hop] - e2[n]) * t) +
                             std::cos((e2[n + hop] - e1[n]) * t) +
                             std::cos((e2[n + hop] - e2[n]) * t));
        }
        out.values[i] = prefactor * acc;
    }
    return out;
}

std::vector<DetectedPeak> detect_peaks(const SpectrumResult& spec, double min_prominence) {
    const std::vector<double>& p = spec.power;
    const std::size_t n = p.size();
    std::vector<DetectedPeak> peaks;
    if (n < 3) return peaks;
    const double global_max = *std::max_element(p.begin(), p.end());
    if (global_max <= 0.0) return peaks;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(p[i] > p[i - 1])) continue;
        // ride out any plateau; the peak anchors at its lowest-frequency sample
        std::size_t j = i;
        while (j + 1 < n && p[j + 1] == p[i]) ++j;
        if (j + 1 >= n || !(p[i] > p[j + 1])) continue;

        // walk outwards to the nearest higher ground on each side
        double left_min = p[i];
        for (std::size_t l = i; l-- > 0;) {
            if (p[l] > p[i]) break;
            left_min = std::min(left_min, p[l]);
        }
        double right_min = p[i];
        for (std::size_t r = j + 1; r < n; ++r) {
            if (p[r] > p[i]) break;
            right_min = std::min(right_min, p[r]);
        }
        const double base = std::max(left_min, right_min);
        const double prominence = p[i] - base;
        if (prominence < min_prominence * global_max) continue;

        // FWHM above the base, linearly interpolated, clipped at the valleys
        const double half = base + 0.5 * prominence;
        double lo = spec.freqs.front(), hi = spec.freqs.back();
        for (std::size_t l = i; l-- > 0;) {
            if (p[l] > p[i]) {
                lo = spec.freqs[l + 1];
                break;
            }
            if (p[l] <= half) {
                const double frac = (half - p[l]) / (p[l + 1] - p[l]);
                lo = spec.freqs[l] + frac * (spec.freqs[l + 1] - spec.freqs[l]);
                break;
            }
        }
        for (std::size_t r = j + 1; r < n; ++r) {
            if (p[r] > p[i]) {
                hi = spec.freqs[r - 1];
                break;
            }
            if (p[r] <= half) {
                const double frac = (p[r - 1] - half) / (p[r - 1] - p[r]);
                hi = spec.freqs[r - 1] + frac * (spec.freqs[r] - spec.freqs[r - 1]);
                break;
            }
        }

        peaks.push_back({spec.freqs[i], p[i], prominence, hi - lo, i});
        i = j;
    }
    return peaks;
}

}  // namespace qrabi::spectrum
