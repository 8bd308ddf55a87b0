// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mmkit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, sized for small MIMO problems
/// (tens of users, a few hundred antennas).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of entries (row-major, rows*cols values, all finite).
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Complex>& entries() { return entries_; }
    const std::vector<Complex>& entries() const { return entries_; }

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// a * b. Throws DimensionError naming both shapes on a mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix hermitian(const ComplexMatrix& a);

/// Element-wise conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Inverse of a square matrix by Gaussian elimination with partial pivoting.
/// A pivot whose magnitude falls below pivot_tol times the largest initial
/// magnitude in its column raises SingularMatrix carrying the pivot index.
ComplexMatrix invert(const ComplexMatrix& a, double pivot_tol = 1e-12);

/// Squared Euclidean norm of one row.
double row_norm_sq(const ComplexMatrix& a, std::size_t row);

} // namespace mmkit
