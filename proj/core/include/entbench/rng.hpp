#pragma once

#include <cstdint>
#include <random>

#include "entbench/matrix.hpp"

namespace entb {

// Deterministic Gaussian stream. mt19937_64 is bit-exact across
// platforms by the standard; std::normal_distribution is not, so the
// normal variates come from an explicit Box-Muller transform.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform();

    double normal();
    cplx complex_normal();  // re and im each standard normal

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Mixes (seed, index) into an independent stream seed; items of a
// counter-seeded ensemble depend only on (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace entb
