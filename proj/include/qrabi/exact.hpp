#pragma once

#include <vector>

#include "qrabi/linalg.hpp"
#include "qrabi/model.hpp"

namespace qrabi::exact {

// Full Hamiltonian in the ordered product basis
// (|down,0>, |up,0>, |down,1>, |up,1>, ...), dimension 2*(n_cut+1):
//   <s,n|H|s,n> = s*delta/2 + n,  <-s,n+-1|H|s,n> = g*sqrt(n + (1 or 0)).
struct Hamiltonian {
    linalg::Matrix matrix;
    int n_cut = 0;

    int dim() const { return matrix.rows(); }
};

Hamiltonian build_hamiltonian(const ModelParams& params, int n_cut);

struct Eigensystem {
    std::vector<double> energies;  // ascending
    linalg::Matrix vectors;        // orthonormal columns
    double residual_norm = 0.0;    // max_j |H v_j - E_j v_j|_2
    int n_cut = 0;
};

Eigensystem diagonalize(const Hamiltonian& h);

// Parity expectation <Pi> with Pi = sigma_z (-1)^{a^dag a} per eigenvector.
std::vector<double> parity_expectations(const Eigensystem& sys);

// Parity labels +-1. [H, Pi] = 0, so any |<Pi>| < 1 signals degenerate
// mixing; such pairs are rotated onto parity eigenvectors in place.
std::vector<int> parity_labels(Eigensystem& sys);

// W(t) = <psi(t)|sigma_z|psi(t)> for the initial state |up> x |alpha>,
// evaluated through the eigenbasis double sum (no time stepping).
// The truncated field is embedded without renormalization. If
// overlap_deficit is given it receives 1 - sum_j p_j^2 (truncation leakage).
TimeSeries inversion(const Eigensystem& sys, const CoherentField& field,
                     const TimeGrid& grid, double* overlap_deficit = nullptr);

// <psi(t)|H|psi(t)> on the grid via the reconstructed product-basis state;
// constant in t up to solver error.
std::vector<double> energy_expectation(const Hamiltonian& h, const Eigensystem& sys,
                                       const CoherentField& field, const TimeGrid& grid);

}  // namespace qrabi::exact
