#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "entbench/density_matrix.hpp"

namespace entb {

// Collective spin operators J_a = 1/2 sum_k sigma_a^{(k)} on n qubits.
struct AngularMomenta {
    std::size_t n_qubits;
    ComplexMatrix jx, jy, jz;

    static const AngularMomenta& of(std::size_t n_qubits);  // cached, n <= 6
};

struct QfiResult {
    std::array<std::array<double, 3>, 3> c_matrix;  // real symmetric
    double lambda_max;                              // largest eigenvalue of C
    double mean_qfi;                                // lambda_max / n_particles
    std::array<double, 3> best_direction;           // unit eigenvector of C
};

// Spectral quantum Fisher information: eigendecomposes rho, skips
// eigenpairs with p_i + p_j below `pair_cutoff`, and maximizes the
// quadratic form over field directions via the C matrix.
QfiResult qfi(const DensityMatrix& rho, std::size_t n_particles, double pair_cutoff = 1e-12);

// Cramér-Rao phase-uncertainty bound 1 / sqrt(n_measurements * F).
// Throws NonPositiveError for F <= 0 or n_measurements < 1.
double phase_bound(double fisher_information, std::size_t n_measurements);

struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

enum class EulerConvention {
    XZX,  // default: x, then z, then x
    XYX,  // equivalent cover of SU(2); used for cross-checks
};

// U_first(alpha) U_middle(beta) U_last(gamma) with U_j(t) = exp(-i t sigma_j / 2).
ComplexMatrix euler_rotation(const EulerAngles& angles,
                             EulerConvention convention = EulerConvention::XZX);

struct OptimizeConfig {
    double step = 1.5707963267948966;         // pi/2
    double refine_step = 1.0471975511965976;  // pi/3
    // second stage runs when the first improves the original by less
    // than this relative fraction (and the original is not ~0)
    double refine_threshold = 0.01;
    EulerConvention convention = EulerConvention::XZX;
    std::size_t jobs = 1;
};

struct OptimizeResult {
    double original = 0.0;   // mean QFI at the identity grid point
    double maximized = 0.0;  // best mean QFI over the rotation grid
    double minimized = 0.0;
    std::array<EulerAngles, 2> max_angles{};  // per-qubit triples
    std::array<EulerAngles, 2> min_angles{};
    bool refined = false;  // second stage ran
};

// Exhaustive mean-QFI extremization of a two-qubit state over the
// 6-angle grid {0, step, 2 step, ...} per qubit, identity included.
// Ties resolve to the first tuple in lexicographic grid order.
OptimizeResult optimize_qfi(const DensityMatrix& rho, const OptimizeConfig& cfg = {});

// Order-preserving map of optimize_qfi over a batch; deterministic for
// any jobs count.
std::vector<OptimizeResult> batch_optimize(const std::vector<DensityMatrix>& states,
                                           const OptimizeConfig& cfg = {});

}  // namespace entb
