#pragma once

#include <utility>

#include "qrabi/model.hpp"

namespace qrabi::rwa {

struct Level {
    int k = 1;  // branch, 1 (lower) or 2 (upper)
    int n = 0;  // photonic quantum number
    double energy = 0.0;
};

// E_kn = n + 1/2 + (-1)^k sqrt(n+1) g
double energy(int k, int n, double g);

Level level(int k, int n, double g);

// Amplitudes on (|up,n>, |down,n+1>): ((-1)^k/sqrt(2), 1/sqrt(2)).
std::pair<double, double> state(int k, int n);

// W(t) = sum_n beta_n^2 cos(2 g sqrt(n+1) t)
TimeSeries inversion(const CoherentField& field, double g, const TimeGrid& grid);

// Short-time approximant cos(2 g sqrt(alpha^2+1) t) exp(-(gt)^2/2).
TimeSeries gaussian_envelope(const CoherentField& field, double g, const TimeGrid& grid);

}  // namespace qrabi::rwa
