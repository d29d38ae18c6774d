#include "entbench/density_matrix.hpp"

#include <cmath>

namespace entb {

DensityMatrix DensityMatrix::create(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat) {
    if (dim_a == 0 || dim_b == 0 || !mat.square() || mat.rows() != dim_a * dim_b)
        throw BadSplitError("density matrix: split does not match matrix size");
    if (!mat.all_finite()) throw DimensionError("density matrix: non-finite entries");
    if (mat.hermiticity_defect() > kHermTol)
        throw NonHermitianError("density matrix: not Hermitian within 1e-12");
    const cplx tr = mat.trace();
    if (std::abs(tr - cplx{1.0, 0.0}) > kTraceTol)
        throw DimensionError("density matrix: trace differs from 1 beyond 1e-12");
    const Spectrum spec = hermitian_eig(mat);
    if (spec.eigenvalues.back() < -kPsdTol)
        throw DimensionError("density matrix: negative eigenvalue beyond 1e-10");
    return DensityMatrix(dim_a, dim_b, std::move(mat));
}

DensityMatrix DensityMatrix::unchecked(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat) {
    return DensityMatrix(dim_a, dim_b, std::move(mat));
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double s = 0.0;
    for (const auto& v : mat_.data()) s += std::norm(v);
    return s;
}

DensityMatrix DensityMatrix::reduced(Subsystem traced_out) const {
    ComplexMatrix r = partial_trace(mat_, dim_a_, dim_b_, traced_out);
    const std::size_t kept = traced_out == Subsystem::B ? dim_a_ : dim_b_;
    return DensityMatrix(kept, 1, std::move(r));
}

ComplexMatrix DensityMatrix::transposed(Subsystem subsystem) const {
    return partial_transpose(mat_, dim_a_, dim_b_, subsystem);
}

DensityMatrix pure_state(std::size_t dim_a, std::size_t dim_b,
                         const std::vector<cplx>& amplitudes) {
    if (amplitudes.size() != dim_a * dim_b)
        throw BadSplitError("pure_state: amplitude count does not match split");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9) throw InvalidSpecError("pure_state: vector not normalized");
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix m(amplitudes.size(), amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        for (std::size_t j = 0; j < amplitudes.size(); ++j)
            m(i, j) = (amplitudes[i] * inv) * std::conj(amplitudes[j] * inv);
    return DensityMatrix::unchecked(dim_a, dim_b, std::move(m));
}

}  // namespace entb
