#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "qrabi/crwa.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/linalg.hpp"
#include "qrabi/model.hpp"

using namespace qrabi;

namespace {

linalg::Matrix random_symmetric(int n, unsigned seed) {
    linalg::Matrix m(n, n);
    unsigned state = seed;
    const auto next = [&]() {
        state = state * 1664525u + 1013904223u;
        return static_cast<double>(state >> 8) / static_cast<double>(1u << 24) - 0.5;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = next();
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

double orthonormality_defect(const linalg::Matrix& v) {
    double worst = 0.0;
    for (int a = 0; a < v.cols(); ++a)
        for (int b = a; b < v.cols(); ++b) {
            double dot = 0.0;
            for (int i = 0; i < v.rows(); ++i) dot += v(i, a) * v(i, b);
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

double matched_exact(int k, int n, double g, const exact::Eigensystem& sys,
                     const std::vector<int>& labels) {
    const int parity = (n % 2 == 0) ? 1 : -1;
    const double target = crwa::energy_closed(k, n, g);
    double best = 0.0, dist = 1e300;
    for (std::size_t j = 0; j < sys.energies.size(); ++j) {
        if (labels[j] != parity) continue;
        if (std::abs(sys.energies[j] - target) < dist) {
            dist = std::abs(sys.energies[j] - target);
            best = sys.energies[j];
        }
    }
    return best;
}

}  // namespace

TEST_CASE("linalg: jacobi on small and random matrices") {
    linalg::Matrix two(2, 2);
    two(0, 0) = 2.0;
    two(1, 1) = 2.0;
    two(0, 1) = two(1, 0) = 1.0;
    const linalg::EigenSystem es = linalg::jacobi_eigensystem(two);
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(3.0).epsilon(1e-14));

    const linalg::Matrix r = random_symmetric(60, 12345u);
    const linalg::EigenSystem er = linalg::jacobi_eigensystem(r);
    CHECK(orthonormality_defect(er.vectors) < 1e-12);
    CHECK(std::is_sorted(er.values.begin(), er.values.end()));
    double worst = 0.0;
    for (int j = 0; j < 60; ++j) {
        double norm2 = 0.0;
        for (int i = 0; i < 60; ++i) {
            double ri = -er.values[j] * er.vectors(i, j);
            for (int l = 0; l < 60; ++l) ri += r(i, l) * er.vectors(l, j);
            norm2 += ri * ri;
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    CHECK(worst < 1e-11 * linalg::inf_norm(r));

    linalg::Matrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(linalg::jacobi_eigensystem(bad), std::invalid_argument);

    // sweep cap exhausted reports failure instead of silent inaccuracy
    CHECK_THROWS_AS(linalg::jacobi_eigensystem(random_symmetric(40, 777u), 1),
                    std::runtime_error);
}

TEST_CASE("exact: hamiltonian assembly") {
    const exact::Hamiltonian h0 = exact::build_hamiltonian(ModelParams{0.0, 1.0}, 1);
    CHECK(h0.dim() == 4);
    CHECK(h0.matrix(0, 0) == doctest::Approx(-0.5));
    CHECK(h0.matrix(1, 1) == doctest::Approx(0.5));
    CHECK(h0.matrix(2, 2) == doctest::Approx(0.5));
    CHECK(h0.matrix(3, 3) == doctest::Approx(1.5));

    const exact::Hamiltonian h = exact::build_hamiltonian(ModelParams{0.06, 1.0}, 1);
    CHECK(h.matrix(3, 0) == doctest::Approx(0.06));  // |down,0> <-> |up,1>
    CHECK(h.matrix(2, 1) == doctest::Approx(0.06));  // |up,0> <-> |down,1>
    CHECK(h.matrix(1, 0) == 0.0);

    const exact::Hamiltonian big = exact::build_hamiltonian(ModelParams{0.13, 1.0}, 7);
    for (int i = 0; i < big.dim(); ++i)
        for (int j = 0; j < big.dim(); ++j) CHECK(big.matrix(i, j) == big.matrix(j, i));

    CHECK_THROWS_AS(exact::build_hamiltonian(ModelParams{0.1, 1.0}, -1), std::invalid_argument);
}

TEST_CASE("exact: smallest truncation") {
    // n_cut = 0 keeps only the photon vacuum; no coupling survives there
    const exact::Eigensystem sys =
        exact::diagonalize(exact::build_hamiltonian(ModelParams{0.3, 1.0}, 0));
    REQUIRE(sys.energies.size() == 2);
    CHECK(sys.energies[0] == doctest::Approx(-0.5));
    CHECK(sys.energies[1] == doctest::Approx(0.5));
}

TEST_CASE("exact: decoupled spectrum at g = 0") {
    const exact::Eigensystem sys = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.0, 1.0}, 10));
    std::vector<double> expected;
    for (int n = 0; n <= 10; ++n) {
        expected.push_back(n - 0.5);
        expected.push_back(n + 0.5);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t j = 0; j < expected.size(); ++j)
        CHECK(sys.energies[j] == doctest::Approx(expected[j]).epsilon(1e-12));
}

TEST_CASE("exact: lowest level vs the corrected ground-state series") {
    const exact::Eigensystem sys = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.06, 1.0}, 60));
    CHECK(std::abs(sys.energies.front() - crwa::ground_state(0.06, 2).energy_2) < 1e-8);

    const double err_02 =
        std::abs(exact::diagonalize(exact::build_hamiltonian(ModelParams{0.2, 1.0}, 60)).energies.front() -
                 crwa::ground_state(0.2, 2).energy_2);
    const double err_01 =
        std::abs(exact::diagonalize(exact::build_hamiltonian(ModelParams{0.1, 1.0}, 60)).energies.front() -
                 crwa::ground_state(0.1, 2).energy_2);
    CHECK(err_02 / err_01 > 50.0);
    CHECK(err_02 / err_01 < 80.0);
}

TEST_CASE("exact: truncation doubling of low eigenvalues") {
    const exact::Eigensystem a = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.2, 1.0}, 60));
    const exact::Eigensystem b = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.2, 1.0}, 120));
    for (int j = 0; j < 40; ++j) CHECK(std::abs(a.energies[j] - b.energies[j]) < 1e-10);
}

TEST_CASE("exact: parity labels") {
    exact::Eigensystem sys = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.1, 1.0}, 40));
    const std::vector<int> labels = exact::parity_labels(sys);
    const std::vector<double> expect = exact::parity_expectations(sys);
    for (double e : expect) CHECK(std::abs(std::abs(e) - 1.0) < 1e-8);

    // ground state is odd under sigma_z (-1)^N; doublets then alternate
    CHECK(labels[0] == -1);
    for (int m = 0; m < 4; ++m) {
        const int expected = (m % 2 == 0) ? 1 : -1;
        CHECK(labels[1 + 2 * m] == expected);
        CHECK(labels[2 + 2 * m] == expected);
    }
}

TEST_CASE("exact: parity projection resolves degenerate mixing") {
    // hand-built degenerate pair mixing |down,0> (odd) with |down,1> (even)
    exact::Eigensystem sys;
    sys.n_cut = 1;
    sys.energies = {0.3, 0.5, 0.5, 0.9};
    sys.vectors = linalg::Matrix(4, 4, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    sys.vectors(1, 0) = 1.0;                       // |up,0>
    sys.vectors(0, 1) = r;                         // (|down,0> + |down,1>)/sqrt(2)
    sys.vectors(2, 1) = r;
    sys.vectors(0, 2) = r;                         // (|down,0> - |down,1>)/sqrt(2)
    sys.vectors(2, 2) = -r;
    sys.vectors(3, 3) = 1.0;                       // |up,1>

    const std::vector<int> labels = exact::parity_labels(sys);
    const std::vector<double> expect = exact::parity_expectations(sys);
    for (double e : expect) CHECK(std::abs(std::abs(e) - 1.0) < 1e-12);
    CHECK(labels[1] + labels[2] == 0);  // one odd, one even after projection
}

TEST_CASE("exact: inversion is frozen at g = 0") {
    const CoherentField field = coherent_amplitudes(1.0, 14);
    const exact::Eigensystem sys = exact::diagonalize(exact::build_hamiltonian(ModelParams{0.0, 1.0}, 14));
    const TimeGrid grid = reduced_time_grid(10.0, 101, 0.05);
    double deficit = 1.0;
    const TimeSeries w = exact::inversion(sys, field, grid, &deficit);
    CHECK(deficit < 1e-10);
    for (double v : w.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exact: energy expectation is conserved") {
    const int n_cut = 40;
    const exact::Hamiltonian h = exact::build_hamiltonian(ModelParams{0.06, 1.0}, n_cut);
    const exact::Eigensystem sys = exact::diagonalize(h);
    const CoherentField field = coherent_amplitudes(std::sqrt(10.0), n_cut);
    const TimeGrid grid = reduced_time_grid(20.0, 11, 0.06);
    const std::vector<double> e = exact::energy_expectation(h, sys, field, grid);
    const double e0 = e.front();
    for (double v : e) CHECK(std::abs(v - e0) < 1e-9);
}

TEST_CASE("exact: eigenvalue continuity within parity sectors") {
    for (double g : {0.10, 0.20}) {
        exact::Eigensystem a = exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, 40));
        exact::Eigensystem b =
            exact::diagonalize(exact::build_hamiltonian(ModelParams{g + 0.01, 1.0}, 40));
        const std::vector<int> la = exact::parity_labels(a);
        const std::vector<int> lb = exact::parity_labels(b);
        for (int sector : {-1, 1}) {
            std::vector<double> ea, eb;
            for (std::size_t j = 0; j < la.size(); ++j) {
                if (la[j] == sector) ea.push_back(a.energies[j]);
                if (lb[j] == sector) eb.push_back(b.energies[j]);
            }
            for (int j = 0; j < 10; ++j) CHECK(std::abs(ea[j] - eb[j]) < 0.05);
        }
    }
}

TEST_CASE("exact: per-level closed-energy error scaling") {
    // the per-level error is O(g^4) at n = 0 but O(g^2) for n >= 1: the
    // three-state block omits |down,n-1>, which exists only for n >= 1
    std::vector<exact::Eigensystem> sys;
    std::vector<std::vector<int>> labels;
    for (double g : {0.2, 0.1}) {
        sys.push_back(exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, 60)));
        labels.push_back(exact::parity_labels(sys.back()));
    }
    const auto ratio = [&](int k, int n) {
        const double e02 = std::abs(crwa::energy_closed(k, n, 0.2) -
                                    matched_exact(k, n, 0.2, sys[0], labels[0]));
        const double e01 = std::abs(crwa::energy_closed(k, n, 0.1) -
                                    matched_exact(k, n, 0.1, sys[1], labels[1]));
        return e02 / e01;
    };
    for (int k : {1, 2}) {
        const double r0 = ratio(k, 0);
        CHECK(r0 > 12.0);
        CHECK(r0 < 20.0);
        for (int n : {1, 3, 5}) {
            const double rn = ratio(k, n);
            CHECK(rn > 3.0);
            CHECK(rn < 4.7);
        }
    }
}
