#include "qrabi/crwa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrabi/linalg.hpp"

namespace qrabi::crwa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double branch_sign(int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("crwa: branch k must be 1 or 2");
    return k == 1 ? -1.0 : 1.0;
}

void check_level(int n, double g) {
    if (n < 0) throw std::invalid_argument("crwa: n must be >= 0");
    if (g < 0.0) throw std::invalid_argument("crwa: g must be >= 0");
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

std::array<double, 3> normalized(std::array<double, 3> c) {
    const double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    for (double& v : c) v /= norm;
    return c;
}

}  // namespace

Cubic cubic_coefficients(int n, double g) {
    check_level(n, g);
    const double nn = n;
    Cubic c;
    c.a2 = -(3.0 * nn + 3.5);
    c.a1 = (nn + 0.5) * (3.0 * nn + 5.5) - (2.0 * nn + 3.0) * g * g;
    c.a0 = -(nn + 0.5) * (nn + 0.5) * (nn + 2.5) + (2.0 * nn * nn + 6.0 * nn + 3.5) * g * g;
    return c;
}

double energy_closed(int k, int n, double g) {
    const double s = branch_sign(k);
    check_level(n, g);
    const double root = std::sqrt((6.0 * n + 9.0) * g * g + 4.0);
    const double arg = clamp_unit((-8.0 + 9.0 * n * g * g) / (root * root * root));
    const double theta = std::acos(arg) / 3.0 + 2.0 * kPi / 3.0;
    return ((3.0 * n + 3.5) + root * (std::cos(theta) + s * std::sqrt(3.0) * std::sin(theta))) / 3.0;
}

double energy_series(int k, int n, double g) {
    const double s = branch_sign(k);
    check_level(n, g);
    const double rn1 = std::sqrt(n + 1.0);
    return n + 0.5 + s * rn1 * g - (n + 2.0) * g * g / 4.0
           - s * (n + 2.0) * (3.0 * n + 2.0) / (32.0 * rn1) * g * g * g;
}

std::array<double, 3> cubic_roots(int n, double g) {
    check_level(n, g);
    // spectrum of the generating three-state block at resonance; an
    // independent route to all three roots, including the discarded one
    linalg::Matrix block(3, 3, 0.0);
    block(0, 0) = n + 0.5;
    block(1, 1) = n + 0.5;
    block(2, 2) = n + 2.5;
    block(0, 1) = block(1, 0) = g * std::sqrt(n + 1.0);
    block(1, 2) = block(2, 1) = g * std::sqrt(n + 2.0);
    const linalg::EigenSystem es = linalg::jacobi_eigensystem(block);
    return {es.values[0], es.values[1], es.values[2]};
}

std::array<double, 3> coefficients_series_raw(int k, int n, double g) {
    const double s = branch_sign(k);
    check_level(n, g);
    const double sqrt2 = std::sqrt(2.0);
    const double rn1 = std::sqrt(n + 1.0);
    const double a = sqrt2 * (n + 2.0) / (16.0 * rn1);
    const double b = sqrt2 * (n + 2.0) * (n + 2.0) / (256.0 * (n + 1.0));
    const double cc = sqrt2 * (n + 2.0) * (17.0 * n + 18.0) / (256.0 * (n + 1.0));
    const double d = std::sqrt(2.0 * n + 4.0) / 4.0;
    const double e = (3.0 * n + 2.0) * std::sqrt(2.0 * n + 4.0) / (32.0 * rn1);
    return {s * sqrt2 / 2.0 + a * g - s * b * g * g,
            sqrt2 / 2.0 - s * a * g - cc * g * g,
            -d * g - s * e * g * g};
}

std::array<double, 3> coefficients_series(int k, int n, double g) {
    return normalized(coefficients_series_raw(k, n, g));
}

std::array<double, 3> coefficients_ratio(int k, int n, double g, double energy,
                                         double delta_atom) {
    branch_sign(k);
    check_level(n, g);
    if (g == 0.0)
        throw std::invalid_argument("coefficients_ratio: singular at g = 0, use the series path");
    const auto omega_m = [&](double m) { return (m - energy + 0.5 * delta_atom) / g; };
    const double omega_n = omega_m(n);
    const double omega_n2 = omega_m(n + 2.0);
    if (std::abs(omega_n) < 1e-13 || std::abs(omega_n2) < 1e-13)
        throw std::runtime_error("coefficients_ratio: degenerate denominator Omega_m(E)");
    return normalized({-std::sqrt(n + 1.0) / omega_n, 1.0, -std::sqrt(n + 2.0) / omega_n2});
}

Level level(int k, int n, double g) {
    Level lv;
    lv.k = k;
    lv.n = n;
    lv.energy = energy_closed(k, n, g);
    lv.coefficients = coefficients_series(k, n, g);
    return lv;
}

GroundState ground_state(double g, int order) {
    if (g < 0.0) throw std::invalid_argument("ground_state: g must be >= 0");
    if (order != 1 && order != 2) throw std::invalid_argument("ground_state: order must be 1 or 2");
    const double g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    GroundState gs;
    gs.order = order;

    gs.d0 = 1.0 - g2 / 8.0 + 11.0 * g4 / 128.0;
    gs.d1 = -0.5 * g + 3.0 * g3 / 16.0;
    gs.energy_1 = -0.5 - 0.5 * g2 + g4 / 8.0;
    {
        const double norm = std::sqrt(gs.d0 * gs.d0 + gs.d1 * gs.d1);
        gs.d0 /= norm;
        gs.d1 /= norm;
    }

    gs.d0_2 = 1.0 - g2 / 8.0 - 13.0 * g4 / 128.0;
    gs.d1_2 = -0.5 * g - g3 / 16.0;
    gs.d2_2 = std::sqrt(2.0) * g2 / 4.0 - std::sqrt(2.0) * g4 / 32.0;
    gs.energy_2 = -0.5 - 0.5 * g2 - g4 / 8.0;
    {
        const double norm =
            std::sqrt(gs.d0_2 * gs.d0_2 + gs.d1_2 * gs.d1_2 + gs.d2_2 * gs.d2_2);
        gs.d0_2 /= norm;
        gs.d1_2 /= norm;
        gs.d2_2 /= norm;
    }
    return gs;
}

}  // namespace qrabi::crwa
