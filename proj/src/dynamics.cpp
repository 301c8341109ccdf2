#include "qrabi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qrabi/crwa.hpp"

namespace qrabi::dynamics {

namespace {

constexpr double kPi = 3.14159265358979323846;

TimeSeries blank(const TimeGrid& grid) {
    return {grid.tau, std::vector<double>(grid.size(), 0.0), grid.g_ref};
}

double closed_f(int n, double beta_n, double sign_k, double g, double a2) {
    return beta_n * (0.5 + sign_k * (n - 2.0 * a2 + 2.0) * g / (8.0 * std::sqrt(n + 1.0)) -
                     a2 * g * g / 8.0);
}

double closed_h(int n, double beta_n, double sign_k, double g, double a2) {
    return beta_n * (-sign_k * std::sqrt(n + 2.0) * g / 4.0 +
                     std::sqrt((n + 2.0) / (n + 1.0)) * (a2 - n - 1.0) * g * g / 8.0);
}

// beta_n continued past the field's cutoff by the same recurrence
std::vector<double> extended_betas(const CoherentField& field, int extra) {
    std::vector<double> b = field.betas;
    for (int n = field.n_cut; n < field.n_cut + extra; ++n)
        b.push_back(b.back() * field.alpha / std::sqrt(n + 1.0));
    return b;
}

}  // namespace

InversionCoefficients compute_coefficients(const CoherentField& field, double g) {
    if (g < 0.0) throw std::invalid_argument("compute_coefficients: g must be >= 0");
    const double a2 = field.mean_photons;
    const int n_cut = field.n_cut;
    const std::vector<double> b = extended_betas(field, 2);

    InversionCoefficients co;
    co.f1.resize(n_cut + 3);
    co.f2.resize(n_cut + 3);
    co.h1.resize(n_cut + 1);
    co.h2.resize(n_cut + 1);
    for (int n = 0; n <= n_cut + 2; ++n) {
        co.f1[n] = closed_f(n, b[n], -1.0, g, a2);
        co.f2[n] = closed_f(n, b[n], 1.0, g, a2);
    }
    for (int n = 0; n <= n_cut; ++n) {
        co.h1[n] = closed_h(n, b[n], -1.0, g, a2);
        co.h2[n] = closed_h(n, b[n], 1.0, g, a2);
    }

    co.R.resize(n_cut + 1);
    co.I1.resize(n_cut + 1);
    co.I2.resize(n_cut + 1);
    co.I12.resize(n_cut + 1);
    co.I21.resize(n_cut + 1);
    for (int n = 0; n <= n_cut; ++n) {
        co.R[n] = 2.0 * (co.f1[n] * co.f2[n] + co.h1[n] * co.h2[n]);
        co.I1[n] = 2.0 * co.h1[n] * co.f1[n + 2];
        co.I2[n] = 2.0 * co.h2[n] * co.f2[n + 2];
        co.I12[n] = 2.0 * co.h1[n] * co.f2[n + 2];
        co.I21[n] = 2.0 * co.h2[n] * co.f1[n + 2];
    }

    co.C = 0.0;
    for (int n = 0; n <= n_cut; ++n)
        co.C += co.f1[n] * co.f1[n] + co.f2[n] * co.f2[n] + co.h1[n] * co.h1[n] +
                co.h2[n] * co.h2[n];

    // cross term with the ground state; d1 from the order-1 series
    const double d1 = -0.5 * g + 3.0 * g * g * g / 16.0;
    const double beta1 = b.size() > 1 ? b[1] : 0.0;
    co.S1 = 2.0 * co.f1[1] * d1 * d1 * beta1;
    co.S2 = 2.0 * co.f2[1] * d1 * d1 * beta1;
    return co;
}

InversionComponents crwa_inversion_full(const CoherentField& field, double g,
                                        const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    const int n_cut = field.n_cut;
    const InversionCoefficients co = compute_coefficients(field, g);

    std::vector<double> e1(n_cut + 3), e2(n_cut + 3);
    for (int n = 0; n <= n_cut + 2; ++n) {
        e1[n] = crwa::energy_closed(1, n, g);
        e2[n] = crwa::energy_closed(2, n, g);
    }

    InversionComponents parts;
    parts.gs_term = blank(grid);
    parts.rabi = blank(grid);
    parts.same_k = blank(grid);
    parts.diff_k = blank(grid);
    parts.total = blank(grid);

    double constant = 0.0;
    for (int n = 0; n <= n_cut; ++n) {
        const double b2 = field.betas[n] * field.betas[n];
        const double shifted = n - 2.0 * a2 + 2.0;
        constant += b2 * (0.5 + 0.25 * n - 0.5 * a2 + shifted * shifted / (16.0 * (n + 1.0)));
    }
    parts.constant = g * g * constant;

    const double gs_amp = a2 * g * g * std::exp(-a2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        parts.gs_term.values[i] = gs_amp * std::cos((2.0 - g * g / 4.0) * t) *
                                  std::cos((1.0 - 15.0 * g * g / 64.0) * std::sqrt(2.0) * g * t);
        double rabi = 0.0, same = 0.0, diff = 0.0;
        for (int n = 0; n <= n_cut; ++n) {
            rabi += co.R[n] * std::cos((e2[n] - e1[n]) * t);
            same += co.I1[n] * std::cos((e1[n] - e1[n + 2]) * t) +
                    co.I2[n] * std::cos((e2[n] - e2[n + 2]) * t);
            diff += co.I12[n] * std::cos((e1[n] - e2[n + 2]) * t) +
                    co.I21[n] * std::cos((e2[n] - e1[n + 2]) * t);
        }
        parts.rabi.values[i] = 2.0 * rabi;
        parts.same_k.values[i] = 2.0 * same;
        parts.diff_k.values[i] = 2.0 * diff;
        parts.total.values[i] = parts.constant + parts.gs_term.values[i] +
                                parts.rabi.values[i] + parts.same_k.values[i] +
                                parts.diff_k.values[i];
    }
    return parts;
}

TimeSeries crwa_inversion_concise(const CoherentField& field, double g, const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    const int n_cut = field.n_cut;
    TimeSeries out = blank(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double w = 0.0;
        for (int n = 0; n <= n_cut; ++n) {
            const double b2 = field.betas[n] * field.betas[n];
            const double rn1 = std::sqrt(n + 1.0), rn3 = std::sqrt(n + 3.0);
            double second = 0.0;
            for (int k = 1; k <= 2; ++k) {
                const double sk = k == 1 ? -1.0 : 1.0;
                // k' = k: narrow split; k' != k: wide split. (-1)^{k'} weights.
                const double same = 2.0 - g * g / 2.0 + sk * g * (rn3 - rn1);
                const double diff = 2.0 - g * g / 2.0 + sk * g * (rn3 + rn1);
                second += sk * std::cos(same * t);      // k' = k
                second += (-sk) * std::cos(diff * t);   // k' != k
            }
            w += b2 * (std::cos(2.0 * rn1 * g * t) - g * a2 / (2.0 * rn1) * second);
        }
        out.values[i] = w;
    }
    return out;
}

TimeSeries envelope_same_k(const CoherentField& field, double g, const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    TimeSeries out = blank(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double sum = 0.0;
        for (int n = 0; n <= field.n_cut; ++n) {
            const double b2 = field.betas[n] * field.betas[n];
            sum += b2 / std::sqrt(n + 1.0) *
                   std::sin(g * (std::sqrt(n + 3.0) - std::sqrt(n + 1.0)) * t);
        }
        out.values[i] = g * a2 * std::sin((2.0 - 0.5 * g * g) * t) * sum;
    }
    return out;
}

TimeSeries envelope_same_k_approx(const CoherentField& field, double g, const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    TimeSeries out = blank(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        out.values[i] = g * a2 / std::sqrt(a2 + 1.0) * std::sin((2.0 - 0.5 * g * g) * t) *
                        std::sin(g * t / std::sqrt(a2 + 1.0));
    }
    return out;
}

TimeSeries envelope_diff_k(const CoherentField& field, double g, const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    TimeSeries out = blank(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double sum = 0.0;
        for (int n = 0; n <= field.n_cut; ++n) {
            const double b2 = field.betas[n] * field.betas[n];
            sum += b2 / std::sqrt(n + 1.0) *
                   std::sin(g * (std::sqrt(n + 1.0) + std::sqrt(n + 3.0)) * t);
        }
        out.values[i] = -g * a2 * std::sin((2.0 - 0.5 * g * g) * t) * sum;
    }
    return out;
}

TimeSeries envelope_diff_k_approx(const CoherentField& field, double g, const TimeGrid& grid) {
    const double alpha = field.alpha;
    TimeSeries out = blank(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        out.values[i] = -g * alpha * std::sin((2.0 - 0.5 * g * g) * t) *
                        std::sin(2.0 * g * alpha * t) * std::exp(-0.5 * g * g * t * t);
    }
    return out;
}

TimeSeries saddle_point_envelope(double n_bar, double g, const TimeGrid& grid,
                                 SaddlePointDiagnostics* diag) {
    if (n_bar <= 0.0) throw std::invalid_argument("saddle_point_envelope: n_bar must be > 0");
    const double rn = std::sqrt(n_bar);
    TimeSeries out = blank(grid);
    if (diag) {
        diag->saddle_points.resize(grid.size());
        diag->outside_validity = false;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        out.values[i] = (1.0 / rn) * std::sin(2.0 * g * rn * t) * std::exp(-0.5 * g * g * t * t);
        if (diag) {
            diag->saddle_points[i] = {n_bar, n_bar * g * t / rn};
            if (g * t > rn) diag->outside_validity = true;
        }
    }
    return out;
}

CollapseMetrics collapse_metrics(const TimeSeries& series, double g, double alpha) {
    const double revival_tau = 2.0 * kPi * alpha;
    const auto window_max = [&](double lo, double hi) {
        double best = 0.0;
        bool seen = false;
        for (std::size_t i = 0; i < series.tau.size(); ++i) {
            if (series.tau[i] < lo || series.tau[i] > hi) continue;
            best = std::max(best, std::abs(series.values[i]));
            seen = true;
        }
        if (!seen) throw std::invalid_argument("collapse_metrics: series does not cover the window");
        return best;
    };
    CollapseMetrics m;
    m.plateau_amplitude = window_max(0.4 * revival_tau, 0.6 * revival_tau);
    m.revival_amplitude = window_max(0.85 * revival_tau, 1.15 * revival_tau);
    m.intrinsic_ratio = m.plateau_amplitude / (g * alpha);
    return m;
}

double min_window_amplitude(const TimeSeries& series, double tau_lo, double tau_hi,
                            double width) {
    const std::size_t n = series.tau.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t head = 0; head < n; ++head) {
        const double start = series.tau[head];
        if (start < tau_lo - 1e-12 || start + width > tau_hi + 1e-12) continue;
        double lo = series.values[head], hi = series.values[head];
        for (std::size_t i = head; i < n && series.tau[i] <= start + width + 1e-12; ++i) {
            lo = std::min(lo, series.values[i]);
            hi = std::max(hi, series.values[i]);
        }
        best = std::min(best, 0.5 * (hi - lo));
    }
    if (!std::isfinite(best))
        throw std::invalid_argument("min_window_amplitude: no window fits the range");
    return best;
}

}  // namespace qrabi::dynamics
