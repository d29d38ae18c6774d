#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "entbench/errors.hpp"

namespace entb {

using cplx = std::complex<double>;

// Dense complex matrix, row-major, value semantics. Sized for the
// small operators this library works with (density matrices and
// collective spin operators up to dimension 64).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix dagger() const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max |m - m†| over entries; 0 for exactly Hermitian input
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return square() && hermiticity_defect() <= tol; }

    bool all_finite() const;

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// column vector helpers (n x 1 matrices)
ComplexMatrix column_vector(const std::vector<cplx>& v);
ComplexMatrix outer_product(const ComplexMatrix& u, const ComplexMatrix& v);

// Pauli matrices
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace entb
