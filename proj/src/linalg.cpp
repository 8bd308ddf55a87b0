// SPDX-License-Identifier: Apache-2.0

#include "mmkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mmkit/errors.hpp"

namespace mmkit {

namespace {

std::string shape_of(const ComplexMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool finite(const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix: entry count " + std::to_string(entries_.size())
                             + " does not match shape " + shape_of(*this));
    }
    if (!all_finite()) {
        throw DimensionError("matrix: entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), finite);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: dimension mismatch (" + shape_of(a) + " vs " + shape_of(b) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix hermitian(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix invert(const ComplexMatrix& a, double pivot_tol) {
    if (a.rows() != a.cols()) {
        throw DimensionError("invert: matrix must be square, got " + shape_of(a));
    }
    const std::size_t n = a.rows();
    ComplexMatrix work = a;
    ComplexMatrix out = ComplexMatrix::identity(n);

    // Per-column magnitude of the input; the pivot test is relative to it.
    std::vector<double> col_scale(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            col_scale[j] = std::max(col_scale[j], std::abs(a(i, j)));
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        double best = std::abs(work(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double mag = std::abs(work(i, k));
            if (mag > best) {
                best = mag;
                pivot_row = i;
            }
        }
        if (best == 0.0 || best < pivot_tol * col_scale[k]) {
            throw SingularMatrix("invert: singular at pivot " + std::to_string(k)
                                 + " (magnitude " + std::to_string(best) + ")", k);
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(pivot_row, j));
                std::swap(out(k, j), out(pivot_row, j));
            }
        }
        const Complex inv_pivot = Complex{1.0, 0.0} / work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) *= inv_pivot;
            out(k, j) *= inv_pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            const Complex factor = work(i, k);
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(k, j);
                out(i, j) -= factor * out(k, j);
            }
        }
    }
    return out;
}

double row_norm_sq(const ComplexMatrix& a, std::size_t row) {
    if (row >= a.rows()) {
        throw DimensionError("row_norm_sq: row " + std::to_string(row) + " out of range for "
                             + shape_of(a));
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        acc += std::norm(a(row, j));
    }
    return acc;
}

} // namespace mmkit
