#include "qrabi/rwa.hpp"

#include <cmath>
#include <stdexcept>

namespace qrabi::rwa {

namespace {
double branch_sign(int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("rwa: branch k must be 1 or 2");
    return k == 1 ? -1.0 : 1.0;
}
}  // namespace

double energy(int k, int n, double g) {
    const double s = branch_sign(k);
    if (n < 0) throw std::invalid_argument("rwa::energy: n must be >= 0");
    if (g < 0.0) throw std::invalid_argument("rwa::energy: g must be >= 0");
    return n + 0.5 + s * std::sqrt(n + 1.0) * g;
}

Level level(int k, int n, double g) { return {k, n, energy(k, n, g)}; }

std::pair<double, double> state(int k, int n) {
    const double s = branch_sign(k);
    if (n < 0) throw std::invalid_argument("rwa::state: n must be >= 0");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {s * inv_sqrt2, inv_sqrt2};
}

TimeSeries inversion(const CoherentField& field, double g, const TimeGrid& grid) {
    TimeSeries out{grid.tau, std::vector<double>(grid.size(), 0.0), grid.g_ref};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double w = 0.0;
        for (int n = 0; n <= field.n_cut; ++n) {
            const double b2 = field.betas[n] * field.betas[n];
            w += b2 * std::cos(2.0 * g * std::sqrt(n + 1.0) * t);
        }
        out.values[i] = w;
    }
    return out;
}

TimeSeries gaussian_envelope(const CoherentField& field, double g, const TimeGrid& grid) {
    const double a2 = field.mean_photons;
    TimeSeries out{grid.tau, std::vector<double>(grid.size(), 0.0), grid.g_ref};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        out.values[i] = std::cos(2.0 * g * std::sqrt(a2 + 1.0) * t) * std::exp(-0.5 * g * g * t * t);
    }
    return out;
}

}  // namespace qrabi::rwa
