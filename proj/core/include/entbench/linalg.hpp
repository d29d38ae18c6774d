#pragma once

#include <functional>
#include <vector>

#include "entbench/matrix.hpp"

namespace entb {

// Eigendecomposition of a Hermitian matrix. Eigenvalues are real and
// sorted descending; eigenvector k is the k-th column of `vectors`.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;

    // V diag(f(lambda)) V†, i.e. apply f on the spectrum and rebuild.
    ComplexMatrix assemble(const std::function<double(double)>& f) const;
};

// Cyclic Jacobi for Hermitian matrices. Converges when the off-diagonal
// Frobenius norm drops below 1e-13, with a budget of 100 sweeps.
// Throws NonHermitianError if the input is asymmetric beyond `herm_tol`,
// NoConvergenceError if the budget runs out.
Spectrum hermitian_eig(const ComplexMatrix& m, double herm_tol = 1e-10);

// Kronecker product, (a ⊗ b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

enum class Subsystem { A, B };

// Partial trace of a (da*db) x (da*db) matrix over one subsystem.
// `traced_out` names the subsystem that is removed.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem traced_out);

// Partial transpose on one subsystem; an involution, Hermiticity- and
// trace-preserving.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem transposed);

// V f(Λ) V† via hermitian_eig. Eigenvalues in [-psd_clamp, 0) are clamped
// to 0 before f is applied. `f_domain` is consulted on each (clamped)
// eigenvalue; returning false raises SpectralDomainError.
ComplexMatrix spectral_fn(const ComplexMatrix& m, const std::function<double(double)>& f,
                          const std::function<bool(double)>& f_domain = nullptr,
                          double psd_clamp = 1e-10);

// Hermitian square root of a PSD matrix (clamping policy as spectral_fn).
ComplexMatrix matrix_sqrt(const ComplexMatrix& m);

}  // namespace entb
