#include <doctest.h>

#include <cmath>

#include "entbench/linalg.hpp"
#include "entbench/states.hpp"
#include "test_helpers.hpp"

using namespace entb;
using entb::test::max_abs_diff;
using entb::test::random_density;
using entb::test::random_ginibre;
using entb::test::random_hermitian;

TEST_CASE("hermitian_eig: identity and diagonal goldens") {
    const Spectrum id = hermitian_eig(ComplexMatrix::identity(2));
    CHECK(id.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    const Spectrum z = hermitian_eig(pauli_z());
    CHECK(z.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(z.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(z.vectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(z.vectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality oracles") {
    GaussianStream rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_hermitian(rng, 6);
        const Spectrum spec = hermitian_eig(m);

        // descending order
        for (std::size_t i = 1; i < 6; ++i)
            CHECK(spec.eigenvalues[i - 1] >= spec.eigenvalues[i]);

        // V Lambda V† reconstructs the input
        const ComplexMatrix rebuilt = spec.assemble([](double x) { return x; });
        CHECK(max_abs_diff(rebuilt, m) <= 1e-9);

        // V† V = I
        const ComplexMatrix vtv = spec.vectors.dagger() * spec.vectors;
        CHECK(max_abs_diff(vtv, ComplexMatrix::identity(6)) <= 1e-10);

        // eigenvalue sum equals the trace
        double sum = 0.0;
        for (double ev : spec.eigenvalues) sum += ev;
        CHECK(sum == doctest::Approx(m.trace().real()).epsilon(0).scale(1).epsilon(1e-10));
    }
}

TEST_CASE("hermitian_eig: degenerate spectra stay consistent") {
    GaussianStream rng(12);
    // half-half projector built in a random basis has eigenvalues {1/2, 1/2, 0, 0}
    const ComplexMatrix u = entb::test::random_unitary(rng, 4);
    ComplexMatrix d(4, 4);
    d(0, 0) = 0.5;
    d(1, 1) = 0.5;
    const ComplexMatrix m = u * d * u.dagger();
    const Spectrum spec = hermitian_eig(m);
    CHECK(spec.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spec.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(max_abs_diff(spec.assemble([](double x) { return x; }), m) <= 1e-9);
}

TEST_CASE("hermitian_eig: rejects asymmetric input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), NonHermitianError);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("kron: identities and the bit-flip pair") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
          ComplexMatrix::identity(4));

    // (sigma_x ⊗ sigma_x)|00> = |11>
    const ComplexMatrix flip = kron(pauli_x(), pauli_x());
    ComplexMatrix ket00(4, 1);
    ket00(0, 0) = 1.0;
    const ComplexMatrix flipped = flip * ket00;
    CHECK(flipped(3, 0) == cplx{1.0, 0.0});
    CHECK(std::abs(flipped(0, 0)) + std::abs(flipped(1, 0)) + std::abs(flipped(2, 0)) == 0.0);
}

TEST_CASE("kron: sigma_y ⊗ sigma_y matches the direct 4x4 construction") {
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    ComplexMatrix direct(4, 4);
    direct(0, 3) = -1.0;
    direct(1, 2) = 1.0;
    direct(2, 1) = 1.0;
    direct(3, 0) = -1.0;
    CHECK(max_abs_diff(yy, direct) == 0.0);
}

TEST_CASE("kron: bilinearity") {
    GaussianStream rng(13);
    const ComplexMatrix a = random_ginibre(rng, 3);
    const ComplexMatrix b = random_ginibre(rng, 2);
    const ComplexMatrix c = random_ginibre(rng, 2);
    CHECK(max_abs_diff(kron(a, b + c), kron(a, b) + kron(a, c)) <= 1e-12);
}

TEST_CASE("partial_trace: product state recovers the factor") {
    GaussianStream rng(14);
    const ComplexMatrix rho_a = random_density(rng, 2);
    const ComplexMatrix rho_b = random_density(rng, 3);
    const ComplexMatrix prod = kron(rho_a, rho_b);
    CHECK(max_abs_diff(partial_trace(prod, 2, 3, Subsystem::B), rho_a) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(prod, 2, 3, Subsystem::A), rho_b) <= 1e-12);
}

TEST_CASE("partial_trace: Bell state reduces to the maximally mixed qubit") {
    const DensityMatrix bell = make_state(family::Bell{1});
    const ComplexMatrix reduced = partial_trace(bell.mat(), 2, 2, Subsystem::B);
    CHECK(max_abs_diff(reduced, 0.5 * ComplexMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("partial_trace: one particle of W4 leaves the W-like mixture") {
    const DensityMatrix w4 = make_state(family::W{4});
    const ComplexMatrix reduced = partial_trace(w4.mat(), 2, 8, Subsystem::A);

    const auto w3 = w_vector(3);
    ComplexMatrix expected(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) expected(i, j) = 0.75 * w3[i] * std::conj(w3[j]);
    expected(0, 0) += 0.25;
    CHECK(max_abs_diff(reduced, expected) <= 1e-12);
    CHECK(reduced.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial_trace: split validation") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), 3, 2, Subsystem::B), BadSplitError);
}

TEST_CASE("partial_transpose: separable states stay PSD") {
    GaussianStream rng(15);
    const ComplexMatrix prod = kron(random_density(rng, 2), random_density(rng, 2));
    const Spectrum spec = hermitian_eig(partial_transpose(prod, 2, 2, Subsystem::B));
    CHECK(spec.eigenvalues.back() >= -1e-10);
}

TEST_CASE("partial_transpose: Bell state has minimum eigenvalue -1/2") {
    const DensityMatrix bell = make_state(family::Bell{1});
    const Spectrum spec = hermitian_eig(bell.transposed(Subsystem::B));
    CHECK(spec.eigenvalues.back() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial_transpose: involution is exact") {
    GaussianStream rng(16);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix rho = random_density(rng, 6);
        const ComplexMatrix twice =
            partial_transpose(partial_transpose(rho, 2, 3, Subsystem::B), 2, 3, Subsystem::B);
        CHECK(twice == rho);  // pure index permutation, bit-exact
    }
}

TEST_CASE("partial_transpose: preserves trace and Hermiticity") {
    GaussianStream rng(17);
    const ComplexMatrix rho = random_density(rng, 4);
    const ComplexMatrix pt = partial_transpose(rho, 2, 2, Subsystem::A);
    CHECK(pt.hermiticity_defect() <= 1e-14);
    CHECK(pt.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral_fn: golden cases") {
    const ComplexMatrix root = matrix_sqrt(ComplexMatrix::identity(3));
    CHECK(max_abs_diff(root, ComplexMatrix::identity(3)) <= 1e-12);

    ComplexMatrix half(2, 2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    const ComplexMatrix log2m = spectral_fn(
        half, [](double x) { return std::log2(x); }, [](double x) { return x > 0.0; });
    CHECK(log2m(0, 0).real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(log2m(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("spectral_fn: sqrt squared recovers a random PSD matrix") {
    GaussianStream rng(18);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = random_density(rng, 4);
        const ComplexMatrix root = matrix_sqrt(rho);
        CHECK(max_abs_diff(root * root, rho) <= 1e-9);
    }
}

TEST_CASE("spectral_fn: domain violations raise") {
    CHECK_THROWS_AS(matrix_sqrt(-1.0 * ComplexMatrix::identity(2)), SpectralDomainError);

    ComplexMatrix singular(2, 2);
    singular(0, 0) = 1.0;  // eigenvalue 0 is outside log's domain
    CHECK_THROWS_AS(spectral_fn(
                        singular, [](double x) { return std::log2(x); },
                        [](double x) { return x > 0.0; }),
                    SpectralDomainError);
}
