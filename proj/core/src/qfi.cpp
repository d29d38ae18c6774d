#include "entbench/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "entbench/parallel.hpp"

namespace entb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

AngularMomenta build_momenta(std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    AngularMomenta j{n_qubits, ComplexMatrix(dim, dim), ComplexMatrix(dim, dim),
                     ComplexMatrix(dim, dim)};
    const ComplexMatrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    ComplexMatrix* sums[3] = {&j.jx, &j.jy, &j.jz};
    for (int a = 0; a < 3; ++a) {
        for (std::size_t k = 0; k < n_qubits; ++k) {
            std::vector<ComplexMatrix> factors(n_qubits, ComplexMatrix::identity(2));
            factors[k] = *paulis[a];
            *sums[a] += kron_all(factors);
        }
        *sums[a] *= cplx{0.5, 0.0};
    }
    return j;
}

// weighted eigenpair list for the C-matrix sum
struct PairWeights {
    std::vector<std::size_t> i, j;
    std::vector<double> w;
};

PairWeights pair_weights(const std::vector<double>& p, double cutoff) {
    PairWeights pw;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const double sum = p[i] + p[j];
            if (sum <= cutoff) continue;
            const double diff = p[i] - p[j];
            const double w = diff * diff / sum;
            if (w == 0.0) continue;
            pw.i.push_back(i);
            pw.j.push_back(j);
            pw.w.push_back(w);
        }
    return pw;
}

// C_kl = 4 sum_{i<j} w_ij Re(M_k[i][j] conj(M_l[i][j])), the ordered-pair
// spectral sum folded onto unordered pairs (M_k is Hermitian).
void accumulate_c(const PairWeights& pw, const ComplexMatrix m[3], double c[3][3]) {
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) c[k][l] = 0.0;
    for (std::size_t t = 0; t < pw.w.size(); ++t) {
        const std::size_t i = pw.i[t];
        const std::size_t j = pw.j[t];
        const cplx mk[3] = {m[0](i, j), m[1](i, j), m[2](i, j)};
        const double w4 = 4.0 * pw.w[t];
        for (int k = 0; k < 3; ++k)
            for (int l = k; l < 3; ++l) {
                const double re = mk[k].real() * mk[l].real() + mk[k].imag() * mk[l].imag();
                c[k][l] += w4 * re;
            }
    }
    c[1][0] = c[0][1];
    c[2][0] = c[0][2];
    c[2][1] = c[1][2];
}

// Largest eigenvalue of a real symmetric 3x3 via Jacobi rotations.
// Accurate to ~1e-15 even on degenerate spectra, where the closed
// trigonometric form loses ~sqrt(eps).
double sym3_lambda_max(const double c[3][3]) {
    double a00 = c[0][0], a11 = c[1][1], a22 = c[2][2];
    double a01 = c[0][1], a02 = c[0][2], a12 = c[1][2];
    for (int sweep = 0; sweep < 16; ++sweep) {
        const double off = a01 * a01 + a02 * a02 + a12 * a12;
        const double scale = std::abs(a00) + std::abs(a11) + std::abs(a22);
        if (off <= 1e-30 * std::max(1.0, scale * scale)) break;
        // rotate each off-diagonal in turn
        for (int pq = 0; pq < 3; ++pq) {
            double *app, *aqq, *apq, *ar1, *ar2;  // remaining row pair
            if (pq == 0) { app = &a00; aqq = &a11; apq = &a01; ar1 = &a02; ar2 = &a12; }
            else if (pq == 1) { app = &a00; aqq = &a22; apq = &a02; ar1 = &a01; ar2 = &a12; }
            else { app = &a11; aqq = &a22; apq = &a12; ar1 = &a01; ar2 = &a02; }
            if (*apq == 0.0) continue;
            const double tau = (*aqq - *app) / (2.0 * *apq);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
            const double cr = 1.0 / std::sqrt(1.0 + t * t);
            const double sr = t * cr;
            const double h = t * *apq;
            *app -= h;
            *aqq += h;
            *apq = 0.0;
            const double r1 = *ar1, r2 = *ar2;
            *ar1 = cr * r1 - sr * r2;
            *ar2 = sr * r1 + cr * r2;
        }
    }
    return std::max({a00, a11, a22});
}

ComplexMatrix conjugated(const ComplexMatrix& u, const ComplexMatrix& m) {
    return u.dagger() * m * u;
}

}  // namespace

const AngularMomenta& AngularMomenta::of(std::size_t n_qubits) {
    static std::mutex mu;
    static std::map<std::size_t, AngularMomenta> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n_qubits);
    if (it == cache.end()) it = cache.emplace(n_qubits, build_momenta(n_qubits)).first;
    return it->second;
}

QfiResult qfi(const DensityMatrix& rho, std::size_t n_particles, double pair_cutoff) {
    if (rho.dim() != (std::size_t{1} << n_particles))
        throw DimensionError("qfi: dimension is not 2^n_particles");

    const Spectrum spec = hermitian_eig(rho.mat());
    const AngularMomenta& j = AngularMomenta::of(n_particles);
    const PairWeights pw = pair_weights(spec.eigenvalues, pair_cutoff);

    const ComplexMatrix m[3] = {conjugated(spec.vectors, j.jx), conjugated(spec.vectors, j.jy),
                                conjugated(spec.vectors, j.jz)};
    QfiResult res{};
    double c[3][3];
    accumulate_c(pw, m, c);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) res.c_matrix[k][l] = c[k][l];

    // small and symmetric; reuse the Jacobi path to also get the direction
    ComplexMatrix cm(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) cm(k, l) = c[k][l];
    const Spectrum cspec = hermitian_eig(cm);
    res.lambda_max = cspec.eigenvalues.front();
    res.mean_qfi = res.lambda_max / static_cast<double>(n_particles);
    for (int k = 0; k < 3; ++k) res.best_direction[k] = cspec.vectors(k, 0).real();
    return res;
}

double phase_bound(double fisher_information, std::size_t n_measurements) {
    if (!(fisher_information > 0.0)) throw NonPositiveError("phase_bound: F must be positive");
    if (n_measurements < 1) throw NonPositiveError("phase_bound: need at least one measurement");
    return 1.0 / std::sqrt(static_cast<double>(n_measurements) * fisher_information);
}

ComplexMatrix euler_rotation(const EulerAngles& angles, EulerConvention convention) {
    auto axis_rot = [](const ComplexMatrix& sigma, double theta) {
        // exp(-i theta sigma / 2) = cos(theta/2) I - i sin(theta/2) sigma
        ComplexMatrix r = ComplexMatrix::identity(2) * cplx{std::cos(theta / 2.0), 0.0};
        r += sigma * cplx{0.0, -std::sin(theta / 2.0)};
        return r;
    };
    const ComplexMatrix& middle =
        convention == EulerConvention::XZX ? pauli_z() : pauli_y();
    return axis_rot(pauli_x(), angles.alpha) * axis_rot(middle, angles.beta) *
           axis_rot(pauli_x(), angles.gamma);
}

namespace {

std::vector<double> angle_grid(double step) {
    if (!(step > 0.0)) throw InvalidSpecError("optimize: step must be positive");
    std::vector<double> grid;
    for (std::size_t k = 0; static_cast<double>(k) * step < kTwoPi - 1e-12; ++k)
        grid.push_back(static_cast<double>(k) * step);
    return grid;
}

struct GridExtrema {
    double max_val, min_val;
    std::size_t max_left, max_right;  // triple indices
    std::size_t min_left, min_right;
    double identity_val;
};

// One full pass over the 6-angle grid at the given step. The state enters
// through its eigensystem; a local rotation U1⊗U2 only rotates the
// eigenvectors, so each side contributes an additive precomputed term to
// the C-matrix input M_k = V†(U1⊗U2)† J_k (U1⊗U2) V.
GridExtrema grid_pass(const Spectrum& spec, const PairWeights& pw, double step,
                      EulerConvention convention, std::size_t jobs,
                      std::vector<EulerAngles>* triples_out) {
    const std::vector<double> grid = angle_grid(step);
    const std::size_t g = grid.size();
    const std::size_t n_triples = g * g * g;

    std::vector<EulerAngles> triples;
    triples.reserve(n_triples);
    for (std::size_t ia = 0; ia < g; ++ia)
        for (std::size_t ib = 0; ib < g; ++ib)
            for (std::size_t ic = 0; ic < g; ++ic)
                triples.push_back(EulerAngles{grid[ia], grid[ib], grid[ic]});

    // per-triple one-sided contributions to M_k
    const std::size_t dim = spec.eigenvalues.size();
    std::vector<std::array<ComplexMatrix, 3>> left(n_triples), right(n_triples);
    parallel_for(n_triples, jobs, [&](std::size_t t) {
        const ComplexMatrix u = euler_rotation(triples[t], convention);
        const ComplexMatrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
        for (int k = 0; k < 3; ++k) {
            const ComplexMatrix rotated = conjugated(u, *paulis[k]);
            left[t][k] = conjugated(spec.vectors, kron(rotated, ComplexMatrix::identity(2)));
            right[t][k] = conjugated(spec.vectors, kron(ComplexMatrix::identity(2), rotated));
        }
    });

    struct Best {
        double max_val = -1.0, min_val = 0.0;
        std::size_t max_right = 0, min_right = 0;
        bool init = false;
    };
    std::vector<Best> per_left(n_triples);
    std::vector<double> identity_val(1, 0.0);

    parallel_for(n_triples, jobs, [&](std::size_t tl) {
        Best best;
        ComplexMatrix m[3] = {ComplexMatrix(dim, dim), ComplexMatrix(dim, dim),
                              ComplexMatrix(dim, dim)};
        double c[3][3];
        for (std::size_t tr = 0; tr < n_triples; ++tr) {
            for (int k = 0; k < 3; ++k) {
                auto& md = m[k].data();
                const auto& ld = left[tl][k].data();
                const auto& rd = right[tr][k].data();
                for (std::size_t e = 0; e < md.size(); ++e) md[e] = 0.5 * (ld[e] + rd[e]);
            }
            accumulate_c(pw, m, c);
            const double val = sym3_lambda_max(c) / 2.0;
            if (!best.init || val > best.max_val) {
                best.max_val = val;
                best.max_right = tr;
            }
            if (!best.init || val < best.min_val) {
                best.min_val = val;
                best.min_right = tr;
            }
            best.init = true;
            if (tl == 0 && tr == 0) identity_val[0] = val;
        }
        per_left[tl] = best;
    });

    GridExtrema ex{};
    ex.identity_val = identity_val[0];
    bool first = true;
    for (std::size_t tl = 0; tl < n_triples; ++tl) {
        const Best& b = per_left[tl];
        if (first || b.max_val > ex.max_val) {
            ex.max_val = b.max_val;
            ex.max_left = tl;
            ex.max_right = b.max_right;
        }
        if (first || b.min_val < ex.min_val) {
            ex.min_val = b.min_val;
            ex.min_left = tl;
            ex.min_right = b.min_right;
        }
        first = false;
    }
    if (triples_out) *triples_out = std::move(triples);
    return ex;
}

}  // namespace

OptimizeResult optimize_qfi(const DensityMatrix& rho, const OptimizeConfig& cfg) {
    if (!rho.is_two_qubit()) throw DimensionError("optimize_qfi: two-qubit states only");
    if (!(cfg.refine_step > 0.0) || cfg.refine_step > cfg.step + 1e-15)
        throw InvalidSpecError("optimize_qfi: require 0 < refine_step <= step");

    const Spectrum spec = hermitian_eig(rho.mat());
    const PairWeights pw = pair_weights(spec.eigenvalues, 1e-12);

    std::vector<EulerAngles> triples;
    const GridExtrema coarse = grid_pass(spec, pw, cfg.step, cfg.convention, cfg.jobs, &triples);

    OptimizeResult res;
    res.original = coarse.identity_val;
    res.maximized = coarse.max_val;
    res.minimized = coarse.min_val;
    res.max_angles = {triples[coarse.max_left], triples[coarse.max_right]};
    res.min_angles = {triples[coarse.min_left], triples[coarse.min_right]};

    // Second stage mirrors the coarse-first search policy: rerun on the
    // finer grid only when the coarse pass improved the starting value by
    // less than the relative threshold (nothing to refine for ~zero QFI).
    const bool refine = res.original > 1e-9 &&
                        (res.maximized - res.original) < cfg.refine_threshold * res.original;
    if (refine && std::abs(cfg.refine_step - cfg.step) > 1e-15) {
        std::vector<EulerAngles> fine_triples;
        const GridExtrema fine =
            grid_pass(spec, pw, cfg.refine_step, cfg.convention, cfg.jobs, &fine_triples);
        res.refined = true;
        if (fine.max_val > res.maximized) {
            res.maximized = fine.max_val;
            res.max_angles = {fine_triples[fine.max_left], fine_triples[fine.max_right]};
        }
        if (fine.min_val < res.minimized) {
            res.minimized = fine.min_val;
            res.min_angles = {fine_triples[fine.min_left], fine_triples[fine.min_right]};
        }
    }
    return res;
}

std::vector<OptimizeResult> batch_optimize(const std::vector<DensityMatrix>& states,
                                           const OptimizeConfig& cfg) {
    std::vector<OptimizeResult> out(states.size());
    OptimizeConfig inner = cfg;
    inner.jobs = 1;
    parallel_for(states.size(), cfg.jobs, [&](std::size_t i) {
        out[i] = optimize_qfi(states[i], inner);
    });
    return out;
}

}  // namespace entb
