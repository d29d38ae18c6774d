#include "entbench/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entb {

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix mul: shape mismatch");
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    if (!square()) throw DimensionError("trace: matrix not square");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix column_vector(const std::vector<cplx>& v) {
    ComplexMatrix r(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) r(i, 0) = v[i];
    return r;
}

ComplexMatrix outer_product(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1) throw DimensionError("outer_product: expected columns");
    ComplexMatrix r(u.rows(), v.rows());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < v.rows(); ++j) r(i, j) = u(i, 0) * std::conj(v(j, 0));
    return r;
}

namespace {

ComplexMatrix make_pauli(int which) {
    ComplexMatrix m(2, 2);
    switch (which) {
        case 0:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 1:
            m(0, 1) = cplx{0.0, -1.0};
            m(1, 0) = cplx{0.0, 1.0};
            break;
        default:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = make_pauli(0);
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = make_pauli(1);
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = make_pauli(2);
    return m;
}

}  // namespace entb
