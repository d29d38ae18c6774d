#include "entbench/sweeps.hpp"

#include <cmath>

#include "entbench/parallel.hpp"
#include "entbench/qfi.hpp"

namespace entb {

SweepQuantity sweep_quantity_from_name(const std::string& name) {
    if (name == "mean_qfi") return SweepQuantity::MeanQfi;
    if (name == "concurrence") return SweepQuantity::Concurrence;
    if (name == "negativity") return SweepQuantity::Negativity;
    if (name == "ree") return SweepQuantity::Ree;
    throw InvalidSpecError("unknown sweep quantity: " + name);
}

std::string sweep_quantity_name(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::MeanQfi: return "mean_qfi";
        case SweepQuantity::Concurrence: return "concurrence";
        case SweepQuantity::Negativity: return "negativity";
        case SweepQuantity::Ree: return "ree";
    }
    return "?";
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points == 0) return {};
    if (points == 1) return {lo};
    std::vector<double> g(points);
    const double span = hi - lo;
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + span * static_cast<double>(i) / static_cast<double>(points - 1);
    return g;
}

namespace {

std::size_t qubit_count(const DensityMatrix& rho) {
    std::size_t n = 0;
    std::size_t d = 1;
    while (d < rho.dim()) {
        d <<= 1;
        ++n;
    }
    if (d != rho.dim()) throw DimensionError("sweep: state dimension is not a power of two");
    return n;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.p_grid.empty()) throw InvalidSpecError("sweep: empty p grid");
    for (std::size_t i = 0; i < spec.p_grid.size(); ++i) {
        const double p = spec.p_grid[i];
        if (p < 0.0 || p > 1.0) throw InvalidSpecError("sweep: p outside [0,1]");
        if (i > 0 && p < spec.p_grid[i - 1]) throw InvalidSpecError("sweep: p grid not ascending");
    }

    const DensityMatrix base = make_state(spec.state);
    const std::size_t n = spec.n_qubits ? spec.n_qubits : qubit_count(base);
    if (base.dim() != (std::size_t{1} << n))
        throw DimensionError("sweep: state dimension does not match qubit count");

    std::vector<SweepRow> rows(spec.p_grid.size());
    parallel_for(spec.p_grid.size(), spec.jobs, [&](std::size_t i) {
        const double p = spec.p_grid[i];
        const DensityMatrix evolved = apply_channel(kraus_set(spec.channel, p), base, n);
        double value = 0.0;
        switch (spec.quantity) {
            case SweepQuantity::MeanQfi:
                value = qfi(evolved, n).mean_qfi;
                break;
            case SweepQuantity::Concurrence:
                value = concurrence(evolved);
                break;
            case SweepQuantity::Negativity:
                value = negativity(evolved);
                break;
            case SweepQuantity::Ree:
                value = ree(evolved, spec.ree_cfg).value;
                break;
        }
        rows[i] = SweepRow{p, value};
    });
    return rows;
}

std::vector<ScanRow> superposition_scan(std::size_t n, std::size_t alpha_steps, double phase,
                                        std::size_t jobs) {
    if (n < 2 || n > 6) throw InvalidSpecError("superposition_scan: n must be in [2, 6]");
    if (alpha_steps < 2) throw InvalidSpecError("superposition_scan: need at least 2 alpha steps");

    const std::vector<double> alphas = linear_grid(0.0, 1.0, alpha_steps);
    std::vector<ScanRow> rows(alphas.size());
    parallel_for(alphas.size(), jobs, [&](std::size_t i) {
        const DensityMatrix rho = make_state(family::Superposition{n, alphas[i], phase});
        rows[i] = ScanRow{alphas[i], qfi(rho, n).mean_qfi};
    });
    return rows;
}

}  // namespace entb
