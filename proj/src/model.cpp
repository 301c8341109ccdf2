#include "qrabi/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrabi {

CoherentField coherent_amplitudes(double alpha, int n_cut) {
    if (alpha < 0.0) throw std::invalid_argument("coherent_amplitudes: alpha must be >= 0");
    if (n_cut < 0) throw std::invalid_argument("coherent_amplitudes: n_cut must be >= 0");

    CoherentField field;
    field.alpha = alpha;
    field.mean_photons = alpha * alpha;
    field.n_cut = n_cut;
    field.betas.resize(static_cast<std::size_t>(n_cut) + 1);
    field.betas[0] = std::exp(-0.5 * alpha * alpha);
    for (int n = 0; n < n_cut; ++n)
        field.betas[n + 1] = field.betas[n] * alpha / std::sqrt(static_cast<double>(n) + 1.0);

    double norm = 0.0;
    for (double b : field.betas) norm += b * b;
    field.tail_deficit = std::max(0.0, 1.0 - norm);
    return field;
}

int choose_truncation(double alpha, double tail_tol) {
    if (tail_tol <= 0.0) throw std::invalid_argument("choose_truncation: tail_tol must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("choose_truncation: alpha must be >= 0");
    if (alpha == 0.0) return 0;

    const double a2 = alpha * alpha;
    int guess = static_cast<int>(std::ceil(a2 + 12.0 * std::sqrt(a2 + 1.0) + 10.0));
    constexpr int kMaxN = 4000;
    while (guess <= kMaxN) {
        const CoherentField field = coherent_amplitudes(alpha, guess);
        if (field.tail_deficit < tail_tol) {
            // shrink to the smallest N that still beats the tolerance
            double tail = field.tail_deficit;
            int n = guess;
            while (n > 0) {
                const double b = field.betas[n];
                if (tail + b * b >= tail_tol) break;
                tail += b * b;
                --n;
            }
            return n;
        }
        guess *= 2;
    }
    throw std::runtime_error("choose_truncation: tolerance unreachable in double precision");
}

TimeGrid reduced_time_grid(double tau_max, int n_points, double g) {
    if (tau_max <= 0.0) throw std::invalid_argument("reduced_time_grid: tau_max must be > 0");
    if (n_points < 2) throw std::invalid_argument("reduced_time_grid: need at least 2 points");
    if (g <= 0.0) throw std::invalid_argument("reduced_time_grid: g must be > 0");

    TimeGrid grid;
    grid.g_ref = g;
    grid.tau.resize(static_cast<std::size_t>(n_points));
    const double step = tau_max / (n_points - 1);
    for (int i = 0; i < n_points; ++i) grid.tau[i] = step * i;
    grid.tau.back() = tau_max;
    return grid;
}

}  // namespace qrabi
