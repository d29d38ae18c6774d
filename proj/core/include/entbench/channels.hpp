#pragma once

#include <string>
#include <vector>

#include "entbench/density_matrix.hpp"

namespace entb {

enum class ChannelKind {
    AmplitudeDamping,        // ADC
    AmplitudeAmplification,  // AAC
    Depolarizing,            // DPC
    PhaseDamping,            // PDC
};

ChannelKind channel_from_name(const std::string& name);  // "adc"|"aac"|"dpc"|"pdc"
std::string channel_name(ChannelKind kind);

// Single-qubit Kraus set at strength p. Operators are kept exactly in
// the printed forms (the phase-damping set stays a triple), so
// element-wise golden tests are meaningful.
struct KrausChannel {
    ChannelKind kind;
    double p;
    std::vector<ComplexMatrix> operators;

    // max |sum K†K - I| over entries
    double completeness_defect() const;
};

// Throws BadStrengthError unless p in [0, 1].
KrausChannel kraus_set(ChannelKind kind, double p);

// Applies the channel independently to every qubit of an n-qubit state:
// rho' = sum over index tuples of (K_{i1} ⊗ .. ⊗ K_{in}) rho (..)†.
// Qutrit subsystems are rejected (DimensionError).
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho,
                            std::size_t n_qubits);

}  // namespace entb
