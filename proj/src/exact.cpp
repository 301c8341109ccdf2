#include "qrabi/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace qrabi::exact {

namespace {

// basis index of |spin s, n photons>, s = 0 down / 1 up
int idx(int n, int s) { return 2 * n + s; }

std::vector<double> parity_diagonal(int n_cut) {
    std::vector<double> pi(2 * (n_cut + 1));
    for (int n = 0; n <= n_cut; ++n) {
        const double photon = (n % 2 == 0) ? 1.0 : -1.0;
        pi[idx(n, 0)] = -photon;
        pi[idx(n, 1)] = photon;
    }
    return pi;
}

std::vector<double> embed_initial_state(const CoherentField& field, int n_cut) {
    if (field.n_cut != n_cut)
        throw std::invalid_argument("exact: field truncation must match the eigensystem");
    std::vector<double> psi0(2 * (n_cut + 1), 0.0);
    for (int n = 0; n <= n_cut; ++n) psi0[idx(n, 1)] = field.betas[n];
    return psi0;
}

std::vector<double> eigenbasis_overlaps(const Eigensystem& sys, const std::vector<double>& psi0) {
    const int dim = sys.vectors.rows();
    std::vector<double> p(dim, 0.0);
    for (int j = 0; j < dim; ++j) {
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) acc += sys.vectors(i, j) * psi0[i];
        p[j] = acc;
    }
    return p;
}

}  // namespace

Hamiltonian build_hamiltonian(const ModelParams& params, int n_cut) {
    if (n_cut < 0) throw std::invalid_argument("build_hamiltonian: n_cut must be >= 0");
    const int dim = 2 * (n_cut + 1);
    Hamiltonian h;
    h.n_cut = n_cut;
    h.matrix = linalg::Matrix(dim, dim, 0.0);
    for (int n = 0; n <= n_cut; ++n) {
        h.matrix(idx(n, 0), idx(n, 0)) = -0.5 * params.delta_atom + n * ModelParams::omega;
        h.matrix(idx(n, 1), idx(n, 1)) = 0.5 * params.delta_atom + n * ModelParams::omega;
    }
    for (int n = 0; n < n_cut; ++n) {
        const double c = params.g * std::sqrt(n + 1.0);
        // (a^dag + a) sigma_x flips the spin and shifts the photon number by one
        h.matrix(idx(n + 1, 1), idx(n, 0)) = c;
        h.matrix(idx(n, 0), idx(n + 1, 1)) = c;
        h.matrix(idx(n + 1, 0), idx(n, 1)) = c;
        h.matrix(idx(n, 1), idx(n + 1, 0)) = c;
    }
    return h;
}

Eigensystem diagonalize(const Hamiltonian& h) {
    linalg::EigenSystem es = linalg::jacobi_eigensystem(h.matrix);
    Eigensystem sys;
    sys.energies = std::move(es.values);
    sys.vectors = std::move(es.vectors);
    sys.n_cut = h.n_cut;

    const int dim = h.dim();
    double worst = 0.0;
    for (int j = 0; j < dim; ++j) {
        double norm2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            double ri = -sys.energies[j] * sys.vectors(i, j);
            for (int l = 0; l < dim; ++l) ri += h.matrix(i, l) * sys.vectors(l, j);
            norm2 += ri * ri;
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    sys.residual_norm = worst;
    return sys;
}

std::vector<double> parity_expectations(const Eigensystem& sys) {
    const int dim = sys.vectors.rows();
    const std::vector<double> pi = parity_diagonal(sys.n_cut);
    std::vector<double> out(dim, 0.0);
    for (int j = 0; j < dim; ++j) {
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) acc += pi[i] * sys.vectors(i, j) * sys.vectors(i, j);
        out[j] = acc;
    }
    return out;
}

std::vector<int> parity_labels(Eigensystem& sys) {
    const int dim = sys.vectors.rows();
    const std::vector<double> pi = parity_diagonal(sys.n_cut);
    std::vector<double> expect = parity_expectations(sys);

    // Degenerate pairs can come out parity-mixed; rotate them onto the
    // +-1 eigenvectors of Pi within the degenerate subspace.
    for (int j = 0; j + 1 < dim; ++j) {
        if (std::abs(expect[j]) >= 1.0 - 1e-6) continue;
        if (std::abs(sys.energies[j + 1] - sys.energies[j]) > 1e-9) continue;
        // 2x2 block of Pi in the span of vectors j, j+1
        double pjj = expect[j], pkk = expect[j + 1], pjk = 0.0;
        for (int i = 0; i < dim; ++i) pjk += pi[i] * sys.vectors(i, j) * sys.vectors(i, j + 1);
        const double theta = 0.5 * std::atan2(2.0 * pjk, pjj - pkk);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < dim; ++i) {
            const double vj = sys.vectors(i, j), vk = sys.vectors(i, j + 1);
            sys.vectors(i, j) = c * vj + s * vk;
            sys.vectors(i, j + 1) = -s * vj + c * vk;
        }
        const std::vector<double> rechecked = parity_expectations(sys);
        expect[j] = rechecked[j];
        expect[j + 1] = rechecked[j + 1];
    }

    std::vector<int> labels(dim);
    for (int j = 0; j < dim; ++j) {
        if (std::abs(expect[j]) < 1.0 - 1e-6)
            throw std::runtime_error("parity_labels: unresolved parity mixing");
        labels[j] = expect[j] > 0.0 ? 1 : -1;
    }
    return labels;
}

TimeSeries inversion(const Eigensystem& sys, const CoherentField& field,
                     const TimeGrid& grid, double* overlap_deficit) {
    const int dim = sys.vectors.rows();
    const std::vector<double> psi0 = embed_initial_state(field, sys.n_cut);
    const std::vector<double> p = eigenbasis_overlaps(sys, psi0);

    if (overlap_deficit) {
        double norm = 0.0;
        for (double pj : p) norm += pj * pj;
        *overlap_deficit = 1.0 - norm;
    }

    // sigma_z in the eigenbasis, weighted by the state overlaps:
    // W(t) = sum_{j,l} p_j p_l Z_jl cos((E_j - E_l) t)
    std::vector<double> sz(dim);
    for (int i = 0; i < dim; ++i) sz[i] = (i % 2 == 0) ? -1.0 : 1.0;

    struct PairTerm {
        double weight;
        double freq;
    };
    std::vector<double> diag_sum_terms;
    std::vector<PairTerm> pairs;
    double diag_sum = 0.0;
    for (int j = 0; j < dim; ++j) {
        for (int l = j; l < dim; ++l) {
            double zjl = 0.0;
            for (int i = 0; i < dim; ++i) zjl += sz[i] * sys.vectors(i, j) * sys.vectors(i, l);
            const double w = p[j] * p[l] * zjl;
            if (l == j) {
                diag_sum += w;
            } else if (std::abs(w) > 1e-18) {
                pairs.push_back({2.0 * w, sys.energies[j] - sys.energies[l]});
            }
        }
    }

    TimeSeries out{grid.tau, std::vector<double>(grid.size(), 0.0), grid.g_ref};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.t(i);
        double w = diag_sum;
        for (const PairTerm& pt : pairs) w += pt.weight * std::cos(pt.freq * t);
        out.values[i] = w;
    }
    return out;
}

std::vector<double> energy_expectation(const Hamiltonian& h, const Eigensystem& sys,
                                       const CoherentField& field, const TimeGrid& grid) {
    // Reconstructs psi(t) in the product basis and applies H there, so the
    // result is only constant if propagation and orthonormality both hold.
    const int dim = sys.vectors.rows();
    const std::vector<double> psi0 = embed_initial_state(field, sys.n_cut);
    const std::vector<double> p = eigenbasis_overlaps(sys, psi0);

    std::vector<double> out(grid.size(), 0.0);
    std::vector<double> re(dim), im(dim), hre(dim), him(dim);
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const double t = grid.t(s);
        for (int i = 0; i < dim; ++i) {
            double ar = 0.0, ai = 0.0;
            for (int j = 0; j < dim; ++j) {
                const double c = p[j] * sys.vectors(i, j);
                ar += c * std::cos(sys.energies[j] * t);
                ai -= c * std::sin(sys.energies[j] * t);
            }
            re[i] = ar;
            im[i] = ai;
        }
        for (int i = 0; i < dim; ++i) {
            double hr = 0.0, hi = 0.0;
            for (int l = 0; l < dim; ++l) {
                hr += h.matrix(i, l) * re[l];
                hi += h.matrix(i, l) * im[l];
            }
            hre[i] = hr;
            him[i] = hi;
        }
        double e = 0.0;
        for (int i = 0; i < dim; ++i) e += re[i] * hre[i] + im[i] * him[i];
        out[s] = e;
    }
    return out;
}

}  // namespace qrabi::exact
