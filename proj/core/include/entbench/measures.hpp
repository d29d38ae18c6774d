#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "entbench/density_matrix.hpp"

namespace entb {

// Wootters concurrence of a two-qubit state, computed from the Hermitian
// form sqrt(rho) (sy⊗sy) rho* (sy⊗sy) sqrt(rho) (same spectrum as the
// textbook non-Hermitian product, but a real spectrum by construction).
double concurrence(const DensityMatrix& rho);

// Maximal concurrence on the spectral orbit, from the sorted eigenvalues
// l1 >= l2 >= l3 >= l4 of rho itself. The two published forms differ in
// the middle term; both are available, the Lambda3 form is the default
// (validated against a random-unitary orbit search).
enum class MaxConcurrenceVariant { Lambda3, Lambda2 };
double max_concurrence(const DensityMatrix& rho,
                       MaxConcurrenceVariant variant = MaxConcurrenceVariant::Lambda3);

// max{0, -2 mu_min} with mu_min the smallest partial-transpose eigenvalue.
double negativity(const DensityMatrix& rho);

// log2(2 N + 1)
double log_negativity(const DensityMatrix& rho);

// Diagnostic for 2x3 states: 2 * sum |negative PT eigenvalues|. Equals
// negativity when at most one eigenvalue is negative.
double negativity_trace_norm(const DensityMatrix& rho);

// |min{0, PT eigenvalues}|; two-qubit only.
double neg_eig_measure(const DensityMatrix& rho);

// Entanglement of formation via the binary entropy of the concurrence.
double eof(const DensityMatrix& rho);
double eof_from_concurrence(double c);

double binary_entropy(double x);  // bits, 0 log 0 = 0

// von Neumann entropy of the reduced state, in bits (pure-state
// entanglement entropy).
double entanglement_entropy(const DensityMatrix& rho);

struct ReeConfig {
    std::size_t max_iterations = 2000;
    double gap_tolerance = 1e-4;
    double support_epsilon = 1e-9;
    std::size_t oracle_restarts = 8;
};

struct ReeResult {
    double value = 0.0;  // upper bound on REE, bits, clamped >= 0
    double gap = 0.0;    // final Frank-Wolfe duality gap
    bool converged = true;
    std::size_t iterations = 0;
};

// Frank-Wolfe upper bound on the relative entropy of entanglement.
// The candidate separable state is kept as an explicit convex mixture
// of pure product states; each step adds the product state minimizing
// the linearized objective (alternating eigenvector oracle with random
// restarts) and line-searches the mixing weight. Supports 2x2 and 2x3.
ReeResult ree(const DensityMatrix& rho, const ReeConfig& cfg = {});

struct MeasureRecord {
    std::optional<double> concurrence;
    std::optional<double> c_max;
    std::optional<double> negativity;
    std::optional<double> log_negativity;
    std::optional<double> neg_eig;
    std::optional<double> eof;
    std::optional<double> ree;
    std::optional<double> ree_gap;
    // diagnostic only, not part of the CSV row contract
    std::optional<double> negativity_trace_norm;
    bool ree_converged = true;

    std::optional<double> get(const std::string& name) const;
};

struct MeasureSelection {
    bool concurrence = true;
    bool c_max = true;
    bool negativity = true;
    bool log_negativity = true;
    bool neg_eig = true;
    bool eof = true;
    bool ree = true;
};

// Bundles every applicable measure. Qubit-qutrit inputs populate only
// the negativity family and REE.
MeasureRecord measure_all(const DensityMatrix& rho, const ReeConfig& cfg = {},
                          const MeasureSelection& select = {});

}  // namespace entb
