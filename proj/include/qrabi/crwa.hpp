#pragma once

#include <array>

#include "qrabi/model.hpp"

namespace qrabi::crwa {

// Characteristic polynomial E^3 + a2 E^2 + a1 E + a0 of the three-state block
// {|up,n>, |down,n+1>, |up,n+2>} at resonance.
struct Cubic {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;

    double eval(double e) const { return ((e + a2) * e + a1) * e + a0; }
};

Cubic cubic_coefficients(int n, double g);

// The two physical roots of the cubic in closed trigonometric form.
// The arccos argument is clamped to [-1, 1]: at g -> 0 it approaches -1
// exactly and rounding can step outside the domain.
double energy_closed(int k, int n, double g);

// Weak-coupling expansion of energy_closed through g^3.
// Truncated at first order in g it coincides with rwa::energy.
double energy_series(int k, int n, double g);

// All three cubic roots, ascending, from a direct diagonalization of the
// generating three-state block. Diagnostic: exposes the superfluous root
// that the branch selection in energy_closed discards, through a route
// independent of the trigonometric formula.
std::array<double, 3> cubic_roots(int n, double g);

// Eigenvector amplitudes on (|up,n>, |down,n+1>, |up,n+2>).
// coefficients_series evaluates the weak-coupling series (default path,
// g <= 0.2) and renormalizes; the _raw variant returns the truncated
// series before renormalization.
std::array<double, 3> coefficients_series(int k, int n, double g);
std::array<double, 3> coefficients_series_raw(int k, int n, double g);

// Amplitudes from the ratio -sqrt(n+1)/Omega_n(E) : 1 : -sqrt(n+2)/Omega_{n+2}(E)
// with Omega_m(E) = (m - E + delta_atom/2)/g, normalized to unit norm.
// `energy` must be a root from energy_closed. Throws if a denominator
// Omega_m(E) degenerates. Off-resonance (delta_atom != 1) output is
// unvalidated; the parameter is threaded through for completeness.
std::array<double, 3> coefficients_ratio(int k, int n, double g, double energy,
                                         double delta_atom = 1.0);

struct Level {
    int k = 1;
    int n = 0;
    double energy = 0.0;
    std::array<double, 3> coefficients{};
};

Level level(int k, int n, double g);

// Ground state with one added state |up,1> (order 1) and with the further
// |down,2> correction (order 2). Both coefficient sets are renormalized.
struct GroundState {
    int order = 1;
    // order-1 state: d0 |down,0> + d1 |up,1>
    double d0 = 1.0;
    double d1 = 0.0;
    double energy_1 = -0.5;
    // order-2 state: d0_2 |down,0> + d1_2 |up,1> + d2_2 |down,2>
    double d0_2 = 1.0;
    double d1_2 = 0.0;
    double d2_2 = 0.0;
    double energy_2 = -0.5;

    double energy() const { return order == 1 ? energy_1 : energy_2; }
};

GroundState ground_state(double g, int order);

}  // namespace qrabi::crwa
