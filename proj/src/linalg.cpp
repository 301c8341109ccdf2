#include "qrabi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrabi::linalg {

Matrix identity(int n) {
    Matrix m(n, n, 0.0);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double inf_norm(const Matrix& a) {
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
        best = std::max(best, row);
    }
    return best;
}

bool is_symmetric(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    return true;
}

namespace {

double offdiag_abs_sum(const Matrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) sum += std::abs(a(i, j));
    return sum;
}

}  // namespace

EigenSystem jacobi_eigensystem(const Matrix& symmetric, int max_sweeps) {
    if (symmetric.rows() != symmetric.cols())
        throw std::invalid_argument("jacobi_eigensystem: matrix must be square");
    if (!is_symmetric(symmetric, 0.0))
        throw std::invalid_argument("jacobi_eigensystem: matrix must be symmetric");

    const int n = symmetric.rows();
    Matrix a = symmetric;
    Matrix v = identity(n);

    EigenSystem sys;
    bool converged = false;
    int sweep = 0;
    for (; sweep < max_sweeps && !converged; ++sweep) {
        const double off = offdiag_abs_sum(a);
        if (off == 0.0) {
            converged = true;
            break;
        }
        // rotate only the "large" entries early on, everything later
        const double thresh = sweep < 3 ? 0.2 * off / (n * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double scaled = 100.0 * std::abs(apq);
                // entries that can no longer affect the diagonal are zeroed outright
                if (sweep > 3 && std::abs(a(p, p)) + scaled == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + scaled == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= thresh) continue;

                const double diff = a(q, q) - a(p, p);
                double t;
                if (std::abs(diff) + scaled == std::abs(diff)) {
                    t = apq / diff;
                } else {
                    const double theta = 0.5 * diff / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip - s * (aiq + tau * aip);
                    a(p, i) = a(i, p);
                    a(i, q) = aiq + s * (aip - tau * aiq);
                    a(q, i) = a(i, q);
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip - s * (viq + tau * vip);
                    v(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
        if (offdiag_abs_sum(a) == 0.0) converged = true;
    }

    sys.off_norm = offdiag_abs_sum(a);
    sys.sweeps = sweep;
    if (!converged)
        throw std::runtime_error("jacobi_eigensystem: no convergence after " +
                                 std::to_string(max_sweeps) +
                                 " sweeps, off-diagonal norm " + std::to_string(sys.off_norm));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    sys.values.resize(n);
    sys.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        sys.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) sys.vectors(i, j) = v(i, order[j]);
    }
    return sys;
}

}  // namespace qrabi::linalg
