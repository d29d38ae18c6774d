#include "entbench/states.hpp"

#include <cmath>

#include "entbench/rng.hpp"

namespace entb {

namespace {

constexpr std::size_t kMaxQubits = 6;

DensityMatrix mixture(std::size_t dim_a, std::size_t dim_b,
                      const std::vector<std::pair<double, ComplexMatrix>>& terms) {
    ComplexMatrix m(dim_a * dim_b, dim_a * dim_b);
    for (const auto& [w, proj] : terms) m += w * proj;
    return DensityMatrix::unchecked(dim_a, dim_b, std::move(m));
}

ComplexMatrix projector(const std::vector<cplx>& v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

void check_qubits(std::size_t n) {
    if (n < 2 || n > kMaxQubits) throw InvalidSpecError("qubit count must be in [2, 6]");
}

}  // namespace

std::vector<cplx> ghz_vector(std::size_t n) {
    check_qubits(n);
    std::vector<cplx> v(std::size_t{1} << n, cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(2.0);
    v.front() = a;
    v.back() = a;
    return v;
}

std::vector<cplx> w_vector(std::size_t n) {
    check_qubits(n);
    std::vector<cplx> v(std::size_t{1} << n, cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) v[std::size_t{1} << k] = a;
    return v;
}

DensityMatrix sample_state(const EnsembleSpec& spec, std::size_t k) {
    const std::size_t d = spec.dim_a * spec.dim_b;
    GaussianStream rng(mix_seed(spec.seed, k));
    auto draw = [&]() -> cplx {
        if (spec.field == Field::Real) return {rng.normal(), 0.0};
        return rng.complex_normal();
    };

    if (spec.measure == EnsembleMeasure::HaarPure) {
        std::vector<cplx> v(d);
        double norm2 = 0.0;
        for (auto& x : v) {
            x = draw();
            norm2 += std::norm(x);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        return DensityMatrix::unchecked(spec.dim_a, spec.dim_b, projector(v));
    }

    // Hilbert-Schmidt: rho = G G† / Tr(G G†) with Ginibre G
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = draw();
    ComplexMatrix m = g * g.dagger();
    const double tr = m.trace().real();
    m *= cplx{1.0 / tr, 0.0};
    // enforce exact Hermitian representation (the product can drift in
    // the last bit, which matters for bit-identical file output)
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = cplx{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const cplx mean = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = mean;
            m(j, i) = std::conj(mean);
        }
    }
    return DensityMatrix::unchecked(spec.dim_a, spec.dim_b, std::move(m));
}

std::vector<DensityMatrix> sample_ensemble(const EnsembleSpec& spec) {
    if (spec.count < 1) throw InvalidSpecError("ensemble count must be >= 1");
    std::vector<DensityMatrix> out;
    out.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) out.push_back(sample_state(spec, k));
    return out;
}

namespace {

DensityMatrix make_bell(int index) {
    if (index < 1 || index > 4) throw InvalidSpecError("Bell index must be 1..4");
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> v(4, cplx{0.0, 0.0});
    switch (index) {
        case 1: v[0] = a; v[3] = a; break;   // (|00> + |11>)/sqrt2
        case 2: v[0] = a; v[3] = -a; break;  // (|00> - |11>)/sqrt2
        case 3: v[1] = a; v[2] = a; break;   // (|10> + |01>)/sqrt2
        default: v[1] = a; v[2] = -a; break; // (|01> - |10>)/sqrt2
    }
    return pure_state(2, 2, v);
}

DensityMatrix make_superposition(const family::Superposition& s) {
    check_qubits(s.n);
    if (s.alpha < 0.0 || s.alpha > 1.0) throw InvalidSpecError("superposition alpha not in [0,1]");
    const double beta = std::sqrt(1.0 - s.alpha * s.alpha);
    const cplx ghz_amp = std::polar(beta, s.phase);
    auto v = w_vector(s.n);
    for (auto& x : v) x *= s.alpha;
    const auto g = ghz_vector(s.n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += ghz_amp * g[i];
    return pure_state(2, v.size() / 2, v);
}

DensityMatrix make_wlike3() {
    std::vector<cplx> zeros(8, cplx{0.0, 0.0});
    zeros[0] = 1.0;
    return mixture(2, 4,
                   {{0.75, projector(w_vector(3))}, {0.25, projector(zeros)}});
}

DensityMatrix make_werner(double w) {
    if (w < 0.0 || w > 1.0) throw InvalidSpecError("Werner weight not in [0,1]");
    ComplexMatrix m = w * make_bell(1).mat() + ((1.0 - w) / 4.0) * ComplexMatrix::identity(4);
    return DensityMatrix::unchecked(2, 2, std::move(m));
}

DensityMatrix make_schmidt(double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw InvalidSpecError("Schmidt lambda not in [0,1]");
    std::vector<cplx> v(4, cplx{0.0, 0.0});
    v[0] = std::sqrt(lambda);
    v[3] = std::sqrt(1.0 - lambda);
    return pure_state(2, 2, v);
}

}  // namespace

DensityMatrix make_state(const StateSpec& spec) {
    return std::visit(
        [](const auto& s) -> DensityMatrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Bell>) {
                return make_bell(s.index);
            } else if constexpr (std::is_same_v<T, family::Ghz>) {
                const auto v = ghz_vector(s.n);
                return pure_state(2, v.size() / 2, v);
            } else if constexpr (std::is_same_v<T, family::W>) {
                const auto v = w_vector(s.n);
                return pure_state(2, v.size() / 2, v);
            } else if constexpr (std::is_same_v<T, family::WLike3>) {
                return make_wlike3();
            } else if constexpr (std::is_same_v<T, family::Superposition>) {
                return make_superposition(s);
            } else if constexpr (std::is_same_v<T, family::SchmidtPure>) {
                return make_schmidt(s.lambda);
            } else if constexpr (std::is_same_v<T, family::Werner>) {
                return make_werner(s.w);
            } else if constexpr (std::is_same_v<T, family::RandomPure>) {
                return sample_state(EnsembleSpec{1, s.seed, Field::Complex,
                                                 EnsembleMeasure::HaarPure, s.dim_a, s.dim_b},
                                    0);
            } else {
                static_assert(std::is_same_v<T, family::RandomMixed>);
                return sample_state(EnsembleSpec{1, s.seed, Field::Complex,
                                                 EnsembleMeasure::HilbertSchmidt, s.dim_a, s.dim_b},
                                    0);
            }
        },
        spec);
}

}  // namespace entb
