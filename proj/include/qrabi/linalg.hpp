#pragma once

#include <vector>

namespace qrabi::linalg {

// Dense row-major matrix, just enough for the eigensolver.
class Matrix {
 public:
    Matrix() = default;
    Matrix(int rows, int cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, value) {}

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<double>& data() const { return data_; }

 private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix identity(int n);

// max_i sum_j |a_ij|
double inf_norm(const Matrix& a);

bool is_symmetric(const Matrix& a, double tol);

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // eigenvectors as columns, same order
    int sweeps = 0;
    double off_norm = 0.0;       // remaining off-diagonal 1-norm at convergence
};

// Cyclic Jacobi with the usual small-rotation threshold schedule.
// Throws std::runtime_error (with the achieved off-norm) if the sweep cap
// is exhausted before the off-diagonal part vanishes.
EigenSystem jacobi_eigensystem(const Matrix& symmetric, int max_sweeps = 64);

}  // namespace qrabi::linalg
