#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "entbench/density_matrix.hpp"

namespace entb {

// Named state families. Kets are written leftmost-is-subsystem-A,
// i.e. the leftmost symbol is the most significant index.
namespace family {

struct Bell {
    int index = 1;  // 1..4, the four Bell states in textbook order
};
struct Ghz {
    std::size_t n = 2;
};
struct W {
    std::size_t n = 2;
};
// 3-qubit W-like state: one particle of W4 traced out,
// 3/4 |W3><W3| + 1/4 |000><000|.
struct WLike3 {};
// alpha |W_n> + e^{i phase} sqrt(1-alpha^2) |GHZ_n>
struct Superposition {
    std::size_t n = 2;
    double alpha = 0.0;
    double phase = 0.0;
};
// sqrt(lambda)|00> + sqrt(1-lambda)|11>
struct SchmidtPure {
    double lambda = 1.0;
};
// w |Phi+><Phi+| + (1-w) I/4
struct Werner {
    double w = 0.0;
};
struct RandomPure {
    std::uint64_t seed = 0;
    std::size_t dim_a = 2, dim_b = 2;
};
struct RandomMixed {
    std::uint64_t seed = 0;
    std::size_t dim_a = 2, dim_b = 2;
};

}  // namespace family

using StateSpec =
    std::variant<family::Bell, family::Ghz, family::W, family::WLike3, family::Superposition,
                 family::SchmidtPure, family::Werner, family::RandomPure, family::RandomMixed>;

// Builds the requested state; throws InvalidSpecError on out-of-range
// parameters. Multi-qubit states carry the split (2, 2^{n-1}).
DensityMatrix make_state(const StateSpec& spec);

// n-qubit GHZ / W state vectors (unit norm, msb-first indexing)
std::vector<cplx> ghz_vector(std::size_t n);
std::vector<cplx> w_vector(std::size_t n);

enum class Field { Real, Complex };
enum class EnsembleMeasure { HilbertSchmidt, HaarPure };

struct EnsembleSpec {
    std::size_t count = 1;
    std::uint64_t seed = 0;
    Field field = Field::Complex;
    EnsembleMeasure measure = EnsembleMeasure::HilbertSchmidt;
    std::size_t dim_a = 2;
    std::size_t dim_b = 2;
};

// The k-th state of an ensemble; depends only on (spec.seed, k).
DensityMatrix sample_state(const EnsembleSpec& spec, std::size_t k);

std::vector<DensityMatrix> sample_ensemble(const EnsembleSpec& spec);

}  // namespace entb
