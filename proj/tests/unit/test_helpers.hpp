#pragma once

#include <cstdint>
#include <vector>

#include "entbench/density_matrix.hpp"
#include "entbench/linalg.hpp"
#include "entbench/rng.hpp"

namespace entb::test {

inline ComplexMatrix random_ginibre(GaussianStream& rng, std::size_t n, bool real = false) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = real ? cplx{rng.normal(), 0.0} : rng.complex_normal();
    return g;
}

inline ComplexMatrix random_hermitian(GaussianStream& rng, std::size_t n) {
    ComplexMatrix g = random_ginibre(rng, n);
    ComplexMatrix h = g + g.dagger();
    return 0.5 * h;
}

inline ComplexMatrix random_density(GaussianStream& rng, std::size_t n, bool real = false) {
    ComplexMatrix g = random_ginibre(rng, n, real);
    ComplexMatrix m = g * g.dagger();
    const double tr = m.trace().real();
    return (1.0 / tr) * m;
}

// Haar-distributed unitary: eigenvector matrix of a GUE sample.
inline ComplexMatrix random_unitary(GaussianStream& rng, std::size_t n) {
    return hermitian_eig(random_hermitian(rng, n)).vectors;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace entb::test
