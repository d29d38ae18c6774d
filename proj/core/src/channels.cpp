#include "entbench/channels.hpp"

#include <cmath>

namespace entb {

ChannelKind channel_from_name(const std::string& name) {
    if (name == "adc") return ChannelKind::AmplitudeDamping;
    if (name == "aac") return ChannelKind::AmplitudeAmplification;
    if (name == "dpc") return ChannelKind::Depolarizing;
    if (name == "pdc") return ChannelKind::PhaseDamping;
    throw InvalidSpecError("unknown channel: " + name);
}

std::string channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "adc";
        case ChannelKind::AmplitudeAmplification: return "aac";
        case ChannelKind::Depolarizing: return "dpc";
        case ChannelKind::PhaseDamping: return "pdc";
    }
    return "?";
}

double KrausChannel::completeness_defect() const {
    ComplexMatrix s(2, 2);
    for (const auto& k : operators) s += k.dagger() * k;
    return (s - ComplexMatrix::identity(2)).max_abs();
}

KrausChannel kraus_set(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadStrengthError("channel strength p must be in [0,1]");
    auto m22 = [](cplx a, cplx b, cplx c, cplx d) {
        ComplexMatrix m(2, 2);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        m(1, 1) = d;
        return m;
    };

    KrausChannel ch{kind, p, {}};
    const double sp = std::sqrt(p);
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            ch.operators = {m22(1, 0, 0, std::sqrt(1.0 - p)), m22(0, sp, 0, 0)};
            break;
        case ChannelKind::AmplitudeAmplification:
            ch.operators = {m22(std::sqrt(1.0 - p), 0, 0, 1), m22(0, 0, sp, 0)};
            break;
        case ChannelKind::Depolarizing: {
            const double h = sp / 2.0;
            ch.operators = {m22(std::sqrt(1.0 - 3.0 * p / 4.0), 0, 0,
                                std::sqrt(1.0 - 3.0 * p / 4.0)),
                            m22(0, h, h, 0), m22(0, cplx{0.0, -h}, cplx{0.0, h}, 0),
                            m22(h, 0, 0, -h)};
            break;
        }
        case ChannelKind::PhaseDamping:
            // kept as the printed triple, not the equivalent two-operator form
            ch.operators = {m22(sp, 0, 0, 0), m22(0, 0, 0, sp),
                            m22(std::sqrt(1.0 - p), 0, 0, std::sqrt(1.0 - p))};
            break;
    }
    return ch;
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho,
                            std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (rho.dim() != dim)
        throw DimensionError("apply_channel: state dimension is not 2^n_qubits");
    if ((rho.dim_a() & (rho.dim_a() - 1)) != 0 || (rho.dim_b() & (rho.dim_b() - 1)) != 0)
        throw DimensionError("apply_channel: channels act on qubits only");

    const std::size_t n_ops = channel.operators.size();
    std::size_t tuples = 1;
    for (std::size_t q = 0; q < n_qubits; ++q) tuples *= n_ops;

    ComplexMatrix out(dim, dim);
    std::vector<ComplexMatrix> factors(n_qubits);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rem = t;
        for (std::size_t q = 0; q < n_qubits; ++q) {
            factors[q] = channel.operators[rem % n_ops];
            rem /= n_ops;
        }
        const ComplexMatrix k = kron_all(factors);
        out += k * rho.mat() * k.dagger();
    }
    // representable drift only; keep the stored matrix exactly Hermitian
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = cplx{out(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx mean = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = mean;
            out(j, i) = std::conj(mean);
        }
    }
    return DensityMatrix::unchecked(rho.dim_a(), rho.dim_b(), std::move(out));
}

}  // namespace entb
