#include "qrabi/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "qrabi/crwa.hpp"
#include "qrabi/dynamics.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/model.hpp"
#include "qrabi/rwa.hpp"
#include "qrabi/spectrum.hpp"

namespace qrabi::validate {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAlphaSq = 10.0;

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// Eigensystems are reused across criteria; keyed by (g, n_cut).
const exact::Eigensystem& cached_eigensystem(double g, int n_cut) {
    static std::map<std::pair<double, int>, exact::Eigensystem> cache;
    const auto key = std::make_pair(g, n_cut);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ModelParams params{g, 1.0};
        it = cache.emplace(key, exact::diagonalize(exact::build_hamiltonian(params, n_cut))).first;
    }
    return it->second;
}

// Exact level for (k, n): nearest eigenvalue of matching parity (-1)^n.
double matched_exact_energy(int k, int n, double g, int n_cut) {
    exact::Eigensystem sys = cached_eigensystem(g, n_cut);  // copy: labels may rotate vectors
    const std::vector<int> labels = exact::parity_labels(sys);
    const int parity = (n % 2 == 0) ? 1 : -1;
    const double target = crwa::energy_closed(k, n, g);
    double best = 0.0, best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sys.energies.size(); ++j) {
        if (labels[j] != parity) continue;
        const double dist = std::abs(sys.energies[j] - target);
        if (dist < best_dist) {
            best_dist = dist;
            best = sys.energies[j];
        }
    }
    return best;
}

TimeSeries exact_series(double g, int n_cut, const TimeGrid& grid) {
    const CoherentField field = coherent_amplitudes(std::sqrt(kAlphaSq), n_cut);
    return exact::inversion(cached_eigensystem(g, n_cut), field, grid);
}

double sup_diff(const TimeSeries& a, const TimeSeries& b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        best = std::max(best, std::abs(a.values[i] - b.values[i]));
    return best;
}

double window_max_abs(const TimeSeries& s, double lo, double hi) {
    double best = 0.0;
    for (std::size_t i = 0; i < s.tau.size(); ++i)
        if (s.tau[i] >= lo && s.tau[i] <= hi) best = std::max(best, std::abs(s.values[i]));
    return best;
}

struct Check {
    bool ok = true;
    std::string lines;

    void add(bool pass, const std::string& line) {
        ok = ok && pass;
        lines += std::string("    [") + (pass ? "ok" : "FAIL") + "] " + line + "\n";
    }
};

CriterionResult c1_cubic_roots() {
    Check ch;
    const double gs[] = {0.02, 0.06, 0.1, 0.15, 0.2, 0.3};
    double worst = 0.0;
    for (double g : gs) {
        for (int n = 0; n <= 60; ++n) {
            const crwa::Cubic cubic = crwa::cubic_coefficients(n, g);
            for (int k = 1; k <= 2; ++k) {
                const double e = crwa::energy_closed(k, n, g);
                const double tol = 1e-10 * std::max(1.0, std::abs(e * e * e));
                worst = std::max(worst, std::abs(cubic.eval(e)) / tol);
            }
        }
    }
    ch.add(worst <= 1.0, fmt("all 732 roots: residual <= 1e-10*max(1,|E|^3), worst ratio %.2e", worst));
    return {1, "cubic-root fidelity", ch.ok, ch.lines, 0.0};
}

CriterionResult c2_energy_accuracy_order() {
    Check ch;
    const int n_cut = 60;
    for (int n = 0; n <= 5; ++n) {
        for (int k = 1; k <= 2; ++k) {
            double err[3];
            const double gs[] = {0.2, 0.1, 0.05};
            for (int i = 0; i < 3; ++i)
                err[i] = std::abs(crwa::energy_closed(k, n, gs[i]) -
                                  matched_exact_energy(k, n, gs[i], n_cut));
            const double r1 = err[0] / err[1];
            const double r2 = err[1] / err[2];
            const bool pass = r1 >= 6.0 && r1 <= 10.0 && r2 >= 6.0 && r2 <= 10.0;
            ch.add(pass, fmt("n=%d k=%d: err(0.2)=%.2e ratios %.2f, %.2f (required in [6,10])",
                             n, k, err[0], r1, r2));
        }
    }
    return {2, "CRWA energy accuracy order", ch.ok, ch.lines, 0.0};
}

CriterionResult c3_ground_state() {
    Check ch;
    const double e_gs2 = crwa::ground_state(0.2, 2).energy_2;
    ch.add(std::abs(e_gs2 - (-0.5202)) <= 1e-12,
           fmt("E_GS2(0.2) = %.13f vs -0.5202", e_gs2));
    const int n_cut = 60;
    const double err_02 = std::abs(crwa::ground_state(0.2, 2).energy_2 -
                                   cached_eigensystem(0.2, n_cut).energies.front());
    const double err_01 = std::abs(crwa::ground_state(0.1, 2).energy_2 -
                                   cached_eigensystem(0.1, n_cut).energies.front());
    const double ratio = err_02 / err_01;
    ch.add(ratio >= 32.0 && ratio <= 128.0,
           fmt("halving err %.2e -> %.2e, ratio %.1f (expected ~64, band [32,128])",
               err_02, err_01, ratio));
    return {3, "ground-state energy", ch.ok, ch.lines, 0.0};
}

CriterionResult c4_rwa_baseline() {
    Check ch;
    const double g = 0.02, alpha = std::sqrt(kAlphaSq);
    const CoherentField field = coherent_amplitudes(alpha, 60);
    const TimeGrid grid = reduced_time_grid(50.0, 10001, g);
    const TimeSeries w = rwa::inversion(field, g, grid);

    const double plateau = window_max_abs(w, 8.0, 12.0);
    ch.add(plateau < 0.02, fmt("plateau max|W| over tau [8,12] = %.2e < 0.02", plateau));

    const dynamics::CollapseMetrics m = dynamics::collapse_metrics(w, g, alpha);
    // locate the actual first revival for the report
    double best = 0.0, best_tau = 0.0;
    for (std::size_t i = 0; i < w.tau.size(); ++i) {
        if (w.tau[i] < 12.0) continue;
        if (std::abs(w.values[i]) > best) {
            best = std::abs(w.values[i]);
            best_tau = w.tau[i];
        }
    }
    ch.add(m.revival_amplitude > 0.3,
           fmt("revival amplitude near tau=2*pi*alpha=%.1f: %.3f > 0.3 "
               "(actual first revival: max|W|=%.3f at tau=%.1f ~= 4*pi*alpha)",
               2.0 * kPi * alpha, m.revival_amplitude, best, best_tau));
    return {4, "RWA collapse/revival baseline", ch.ok, ch.lines, 0.0};
}

CriterionResult c5_absence_of_collapse() {
    Check ch;
    const double alpha = std::sqrt(kAlphaSq);
    const int n_cut = 60;
    const CoherentField field = coherent_amplitudes(alpha, n_cut);
    for (double g : {0.02, 0.06}) {
        const TimeGrid grid = reduced_time_grid(24.0, 4801, g);
        const double ga = g * alpha;
        const TimeSeries we = exact_series(g, n_cut, grid);
        const dynamics::CollapseMetrics me = dynamics::collapse_metrics(we, g, alpha);
        ch.add(me.plateau_amplitude >= 0.5 * ga && me.plateau_amplitude <= 2.0 * ga,
               fmt("g=%.2f exact plateau %.4f within factor 2 of g*alpha=%.4f", g,
                   me.plateau_amplitude, ga));
        const TimeSeries wc = dynamics::crwa_inversion_full(field, g, grid).total;
        const dynamics::CollapseMetrics mc = dynamics::collapse_metrics(wc, g, alpha);
        ch.add(mc.plateau_amplitude >= 0.5 * ga && mc.plateau_amplitude <= 2.0 * ga,
               fmt("g=%.2f CRWA plateau %.4f within factor 2 of g*alpha=%.4f", g,
                   mc.plateau_amplitude, ga));
        const TimeSeries wr = rwa::inversion(field, g, grid);
        const dynamics::CollapseMetrics mr = dynamics::collapse_metrics(wr, g, alpha);
        ch.add(mr.plateau_amplitude < 0.02,
               fmt("g=%.2f RWA plateau %.2e < 0.02", g, mr.plateau_amplitude));
    }
    return {5, "absence of collapse", ch.ok, ch.lines, 0.0};
}

CriterionResult c6_fidelity_ordering() {
    Check ch;
    const int n_cut = 60;
    const CoherentField field = coherent_amplitudes(std::sqrt(kAlphaSq), n_cut);
    for (double g : {0.02, 0.06, 0.1, 0.2}) {
        const TimeGrid grid = reduced_time_grid(40.0, 2001, g);
        const TimeSeries we = exact_series(g, n_cut, grid);
        const double d_crwa = sup_diff(we, dynamics::crwa_inversion_full(field, g, grid).total);
        const double d_rwa = sup_diff(we, rwa::inversion(field, g, grid));
        ch.add(d_crwa < d_rwa,
               fmt("g=%.2f: sup|exact-CRWA| %.4f < sup|exact-RWA| %.4f", g, d_crwa, d_rwa));
    }
    return {6, "CRWA-vs-exact fidelity ordering", ch.ok, ch.lines, 0.0};
}

CriterionResult c7_decomposition() {
    Check ch;
    const double alpha = std::sqrt(kAlphaSq);
    const CoherentField field = coherent_amplitudes(alpha, 60);
    const double revival_tau = 2.0 * kPi * alpha;
    for (double g : {0.02, 0.06, 0.1}) {
        const TimeGrid grid = reduced_time_grid(revival_tau, 1988, g);
        const dynamics::InversionComponents parts = dynamics::crwa_inversion_full(field, g, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double sum = parts.constant + parts.gs_term.values[i] + parts.rabi.values[i] +
                               parts.same_k.values[i] + parts.diff_k.values[i];
            worst = std::max(worst, std::abs(sum - parts.total.values[i]));
        }
        ch.add(worst <= 1e-12, fmt("g=%.2f decomposition identity, worst %.1e <= 1e-12", g, worst));

        const double floor = 0.3 * g * alpha;
        const double min_amp =
            dynamics::min_window_amplitude(parts.same_k, 0.0, revival_tau, 2.0);
        const double min_interior =
            dynamics::min_window_amplitude(parts.same_k, 2.0, revival_tau, 2.0);
        ch.add(min_amp >= floor,
               fmt("g=%.2f same_k width-2 window amplitude min %.4f >= 0.3*g*alpha=%.4f "
                   "(interior windows, tau>=2: %.4f)",
                   g, min_amp, floor, min_interior));
    }
    return {7, "decomposition identity and no-collapse window", ch.ok, ch.lines, 0.0};
}

CriterionResult c8_envelopes() {
    Check ch;
    const double g = 0.06, alpha = std::sqrt(kAlphaSq);
    const CoherentField field = coherent_amplitudes(alpha, 60);

    // first node of the sliding-window amplitude of the same-k approximant
    {
        const TimeGrid grid = reduced_time_grid(30.0, 6001, g);
        const TimeSeries approx = dynamics::envelope_same_k_approx(field, g, grid);
        const double width = 2.0, step = 0.05;
        std::vector<double> amp;
        std::vector<double> start;
        for (double a = 0.0; a + width <= 30.0 + 1e-9; a += step) {
            double lo = 1e300, hi = -1e300;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (grid.tau[i] < a || grid.tau[i] > a + width) continue;
                lo = std::min(lo, approx.values[i]);
                hi = std::max(hi, approx.values[i]);
            }
            amp.push_back(0.5 * (hi - lo));
            start.push_back(a);
        }
        std::size_t imax = 0;
        for (std::size_t i = 1; i < amp.size(); ++i)
            if (amp[i] > amp[imax]) imax = i;
        std::size_t imin = imax;
        while (imin + 1 < amp.size() && amp[imin + 1] <= amp[imin]) ++imin;
        const double half_period = start[imin] + 0.5 * width;
        ch.add(std::abs(half_period - 20.0) <= 2.0,
               fmt("same-k approximant first envelope half-period %.2f within 20 +- 10%%",
                   half_period));
    }

    // saddle-point approximant vs the regrouped different-k sum
    {
        const TimeGrid grid = reduced_time_grid(10.0, 5001, g);
        const TimeSeries sum = dynamics::envelope_diff_k(field, g, grid);
        const TimeSeries approx = dynamics::envelope_diff_k_approx(field, g, grid);
        double sup_ref = 0.0;
        for (double v : sum.values) sup_ref = std::max(sup_ref, std::abs(v));
        const double rel = sup_diff(sum, approx) / sup_ref;
        ch.add(rel <= 0.10,
               fmt("diff-k approximant relative sup error %.3f <= 0.10 over tau [0,10]", rel));
    }
    return {8, "envelope approximants", ch.ok, ch.lines, 0.0};
}

CriterionResult c9_spectrum_peaks() {
    Check ch;
    const double alpha = std::sqrt(kAlphaSq);
    const int n_cut = 60;
    const double bin = 0.1;
    const CoherentField field = coherent_amplitudes(alpha, n_cut);
    const std::vector<double> freqs = spectrum::uniform_freq_grid(0.5, 25.0, bin);

    const auto exact_spectrum = [&](double g) {
        const double t_total = 2.0 * kPi / (bin * 2.0 * g);
        const int n_points = static_cast<int>(std::lround(t_total / 0.02)) + 1;
        const TimeGrid grid = reduced_time_grid(t_total * 2.0 * g, n_points, g);
        return spectrum::power_spectrum(exact_series(g, n_cut, grid), freqs);
    };
    const auto match = [&](const std::vector<spectrum::DetectedPeak>& peaks, double pred) {
        double best = 1e300;
        for (const spectrum::DetectedPeak& p : peaks)
            best = std::min(best, std::abs(p.frequency - pred));
        return best;
    };

    {
        const double g = 0.06;
        const spectrum::SpectrumResult spec = exact_spectrum(g);
        const std::vector<spectrum::DetectedPeak> peaks = spectrum::detect_peaks(spec, 1e-4);
        for (const spectrum::PeakPrediction& p : spectrum::predict_peaks_first_order(g, alpha)) {
            if (p.label == "omega_c") continue;  // reference frequency, not itself a peak
            const double off = match(peaks, p.frequency);
            ch.add(off <= 2.0 * bin + 1e-9,
                   fmt("g=0.06 %s predicted %.3f, nearest detected peak off by %.2f bins",
                       p.label.c_str(), p.frequency, off / bin));
        }
    }
    for (double g : {0.15, 0.2}) {
        const spectrum::SpectrumResult spec = exact_spectrum(g);
        const std::vector<spectrum::DetectedPeak> peaks = spectrum::detect_peaks(spec, 1e-4);
        for (const spectrum::PeakPrediction& p : spectrum::predict_peaks_second_order(g, alpha)) {
            const double off = match(peaks, p.frequency);
            ch.add(off <= 2.0 * bin + 1e-9,
                   fmt("g=%.2f %s predicted %.3f, nearest detected peak off by %.2f bins", g,
                       p.label.c_str(), p.frequency, off / bin));
        }
    }
    return {9, "spectrum peak matching", ch.ok, ch.lines, 0.0};
}

CriterionResult c10_exact_contracts() {
    Check ch;
    const ModelParams params{0.2, 1.0};
    const exact::Hamiltonian h = exact::build_hamiltonian(params, 120);
    exact::Eigensystem sys = exact::diagonalize(h);

    double ortho = 0.0;
    const int dim = h.dim();
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            double dot = 0.0;
            for (int i = 0; i < dim; ++i) dot += sys.vectors(i, a) * sys.vectors(i, b);
            ortho = std::max(ortho, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    ch.add(ortho <= 1e-10, fmt("dim 242 orthonormality deviation %.1e <= 1e-10", ortho));
    const double res_tol = 1e-10 * linalg::inf_norm(h.matrix);
    ch.add(sys.residual_norm <= res_tol,
           fmt("dim 242 eigen-residual %.1e <= 1e-10*|H| = %.1e", sys.residual_norm, res_tol));

    const std::vector<int> labels = exact::parity_labels(sys);
    const std::vector<double> expect = exact::parity_expectations(sys);
    double parity_dev = 0.0;
    for (double e : expect) parity_dev = std::max(parity_dev, std::abs(std::abs(e) - 1.0));
    ch.add(parity_dev <= 1e-8 && static_cast<int>(labels.size()) == dim,
           fmt("parity labels +-1 within %.1e <= 1e-8", parity_dev));

    const double g = 0.2;
    const TimeGrid grid = reduced_time_grid(40.0, 2001, g);
    const TimeSeries w60 = exact_series(g, 60, grid);
    const CoherentField f120 = coherent_amplitudes(std::sqrt(kAlphaSq), 120);
    const TimeSeries w120 = exact::inversion(sys, f120, grid);
    const double diff = sup_diff(w60, w120);
    ch.add(diff < 1e-8, fmt("truncation doubling n_cut 60 vs 120: sup diff %.1e < 1e-8", diff));
    return {10, "exact-solver contracts", ch.ok, ch.lines, 0.0};
}

}  // namespace

std::vector<int> criteria_ids(bool quick) {
    std::vector<int> ids;
    for (int i = 1; i <= 10; ++i)
        if (!quick || i != 9) ids.push_back(i);
    return ids;
}

CriterionResult run_criterion(int id) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = c1_cubic_roots(); break;
        case 2: r = c2_energy_accuracy_order(); break;
        case 3: r = c3_ground_state(); break;
        case 4: r = c4_rwa_baseline(); break;
        case 5: r = c5_absence_of_collapse(); break;
        case 6: r = c6_fidelity_ordering(); break;
        case 7: r = c7_decomposition(); break;
        case 8: r = c8_envelopes(); break;
        case 9: r = c9_spectrum_peaks(); break;
        case 10: r = c10_exact_contracts(); break;
        default: throw std::invalid_argument("run_criterion: id must be 1..10");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
       << fmt("%.2f", r.seconds) << " s)\n"
       << r.details;
    return os.str();
}

}  // namespace qrabi::validate
