#pragma once

#include <cstddef>

#include "entbench/linalg.hpp"
#include "entbench/matrix.hpp"

namespace entb {

// Validated bipartite density matrix: Hermitian within 1e-12, unit trace
// within 1e-12, and positive semidefinite up to -1e-10 eigenvalue drift.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    // Validates all three invariants; throws NonHermitianError,
    // BadSplitError or DimensionError on violation.
    static DensityMatrix create(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat);

    // Skips validation; for internal paths whose output is Hermitian and
    // trace-preserving by construction. Tests re-validate.
    static DensityMatrix unchecked(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& mat() const { return mat_; }

    bool is_two_qubit() const { return dim_a_ == 2 && dim_b_ == 2; }
    bool is_qubit_qutrit() const { return dim_a_ == 2 && dim_b_ == 3; }

    double purity() const;

    DensityMatrix reduced(Subsystem traced_out) const;
    ComplexMatrix transposed(Subsystem subsystem) const;

private:
    DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat)
        : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {}

    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix mat_;
};

// Density matrix of a normalized state vector with the given split.
DensityMatrix pure_state(std::size_t dim_a, std::size_t dim_b, const std::vector<cplx>& amplitudes);

}  // namespace entb
