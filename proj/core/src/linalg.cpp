#include "entbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entb {

namespace {

constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). Updates a (two-sided) and
// accumulates the rotation into v (right multiplication).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    // a rotation this small cannot change the diagonal at double
    // precision; zeroing the entry directly is the same transform
    if (abs_apq < 1e-18 * (std::abs(a(p, p).real()) + std::abs(a(q, q).real()))) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        return;
    }

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx phase = apq / abs_apq;
    const cplx sp = s * phase;             // column q mixes in e^{+i phi}
    const cplx sm = s * std::conj(phase);  // column p mixes in e^{-i phi}

    const std::size_t n = a.rows();
    // A <- U† A U with U = I except U(p,p)=U(q,q)=c, U(p,q)=sp, U(q,p)=-sm
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - sm * akq;
        a(k, q) = sp * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk - std::conj(sm) * aqk;
        a(q, k) = std::conj(sp) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx{a(p, p).real(), 0.0};
    a(q, q) = cplx{a(q, q).real(), 0.0};

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - sm * vkq;
        v(k, q) = sp * vkp + c * vkq;
    }
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& m, double herm_tol) {
    if (!m.square()) throw DimensionError("hermitian_eig: matrix not square");
    if (!m.all_finite()) throw NonHermitianError("hermitian_eig: non-finite entries");
    if (m.hermiticity_defect() > herm_tol)
        throw NonHermitianError("hermitian_eig: symmetry defect above tolerance");

    const std::size_t n = m.rows();
    // symmetrize to remove representable drift before iterating
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx mean = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    bool converged = n < 2 || off_diagonal_frobenius(a) < kOffDiagTarget;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        converged = off_diagonal_frobenius(a) < kOffDiagTarget;
    }
    if (!converged) throw NoConvergenceError("hermitian_eig: sweep budget exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        spec.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) spec.vectors(r, k) = v(r, order[k]);
    }
    return spec;
}

ComplexMatrix Spectrum::assemble(const std::function<double(double)>& f) const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(eigenvalues[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = vectors(i, k);
            if (vik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += fk * vik * std::conj(vectors(j, k));
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) return ComplexMatrix::identity(1);
    ComplexMatrix r = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) r = kron(r, factors[i]);
    return r;
}

namespace {

void check_split(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    if (!m.square() || dim_a * dim_b != m.rows())
        throw BadSplitError("bipartite split does not match matrix size");
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem traced_out) {
    check_split(m, dim_a, dim_b);
    if (traced_out == Subsystem::B) {
        ComplexMatrix r(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t j = 0; j < dim_a; ++j) {
                cplx s{0.0, 0.0};
                for (std::size_t k = 0; k < dim_b; ++k) s += m(i * dim_b + k, j * dim_b + k);
                r(i, j) = s;
            }
        return r;
    }
    ComplexMatrix r(dim_b, dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
            cplx s{0.0, 0.0};
            for (std::size_t i = 0; i < dim_a; ++i) s += m(i * dim_b + k, i * dim_b + l);
            r(k, l) = s;
        }
    return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem transposed) {
    check_split(m, dim_a, dim_b);
    ComplexMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t k = 0; k < dim_b; ++k)
            for (std::size_t j = 0; j < dim_a; ++j)
                for (std::size_t l = 0; l < dim_b; ++l) {
                    if (transposed == Subsystem::B)
                        r(i * dim_b + k, j * dim_b + l) = m(i * dim_b + l, j * dim_b + k);
                    else
                        r(i * dim_b + k, j * dim_b + l) = m(j * dim_b + k, i * dim_b + l);
                }
    return r;
}

ComplexMatrix spectral_fn(const ComplexMatrix& m, const std::function<double(double)>& f,
                          const std::function<bool(double)>& f_domain, double psd_clamp) {
    Spectrum spec = hermitian_eig(m);
    for (double& ev : spec.eigenvalues) {
        if (ev < 0.0 && ev >= -psd_clamp) ev = 0.0;
        if (f_domain && !f_domain(ev))
            throw SpectralDomainError("spectral_fn: eigenvalue outside function domain");
    }
    return spec.assemble(f);
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m) {
    return spectral_fn(
        m, [](double x) { return std::sqrt(x); }, [](double x) { return x >= 0.0; });
}

}  // namespace entb
