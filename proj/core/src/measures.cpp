#include "entbench/measures.hpp"

#include <algorithm>
#include <cmath>

#include "entbench/rng.hpp"

namespace entb {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

const ComplexMatrix& spin_flip_matrix() {
    static const ComplexMatrix m = kron(pauli_y(), pauli_y());
    return m;
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
    if (!rho.is_two_qubit()) throw DimensionError(std::string(what) + ": two-qubit states only");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double binary_entropy(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double concurrence(const DensityMatrix& rho) {
    require_two_qubit(rho, "concurrence");
    const ComplexMatrix& flip = spin_flip_matrix();
    const ComplexMatrix root = matrix_sqrt(rho.mat());
    const ComplexMatrix flipped = flip * rho.mat().conjugate() * flip;
    const ComplexMatrix herm = root * flipped * root;

    Spectrum spec = hermitian_eig(herm);
    // the square root amplifies eigensolver noise near zero; spectrum
    // entries below 1e-12 of the leading one are noise by construction
    const double floor = std::max(spec.eigenvalues[0], 0.0) * 1e-12;
    double lambda[4];
    for (int i = 0; i < 4; ++i)
        lambda[i] = spec.eigenvalues[i] > floor ? std::sqrt(spec.eigenvalues[i]) : 0.0;
    return clamp01(std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]));
}

double max_concurrence(const DensityMatrix& rho, MaxConcurrenceVariant variant) {
    require_two_qubit(rho, "max_concurrence");
    const Spectrum spec = hermitian_eig(rho.mat());
    const auto& l = spec.eigenvalues;  // descending
    const double cross = 2.0 * std::sqrt(std::max(0.0, l[1]) * std::max(0.0, l[3]));
    const double mid = variant == MaxConcurrenceVariant::Lambda3 ? l[2] : l[1];
    return clamp01(std::max(0.0, l[0] - mid - cross));
}

namespace {

std::vector<double> pt_eigenvalues(const DensityMatrix& rho, const char* what) {
    if (!rho.is_two_qubit() && !rho.is_qubit_qutrit())
        throw DimensionError(std::string(what) + ": supported splits are 2x2 and 2x3");
    return hermitian_eig(rho.transposed(Subsystem::B)).eigenvalues;
}

}  // namespace

double negativity(const DensityMatrix& rho) {
    const auto eig = pt_eigenvalues(rho, "negativity");
    return std::max(0.0, -2.0 * eig.back());
}

double log_negativity(const DensityMatrix& rho) {
    return std::log2(2.0 * negativity(rho) + 1.0);
}

double negativity_trace_norm(const DensityMatrix& rho) {
    const auto eig = pt_eigenvalues(rho, "negativity_trace_norm");
    double s = 0.0;
    for (double e : eig)
        if (e < 0.0) s -= e;
    return 2.0 * s;
}

double neg_eig_measure(const DensityMatrix& rho) {
    require_two_qubit(rho, "neg_eig_measure");
    const auto eig = pt_eigenvalues(rho, "neg_eig_measure");
    return std::abs(std::min(0.0, eig.back()));
}

double eof_from_concurrence(double c) {
    const double arg = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    return binary_entropy(arg);
}

double eof(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

double entanglement_entropy(const DensityMatrix& rho) {
    const DensityMatrix reduced = rho.reduced(Subsystem::B);
    const Spectrum spec = hermitian_eig(reduced.mat());
    double s = 0.0;
    for (double p : spec.eigenvalues)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

// ---------------------------------------------------------------------
// Relative entropy of entanglement, Frank-Wolfe upper bound
// ---------------------------------------------------------------------

namespace {

struct ProductAtom {
    double weight;
    std::vector<cplx> a;     // dim_a amplitudes, unit norm
    std::vector<cplx> b;     // dim_b amplitudes, unit norm
    ComplexMatrix projector; // |a><a| ⊗ |b><b|
};

ComplexMatrix product_projector(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const std::size_t da = a.size(), db = b.size();
    ComplexMatrix m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k)
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t l = 0; l < db; ++l)
                    m(i * db + k, j * db + l) =
                        a[i] * b[k] * std::conj(a[j]) * std::conj(b[l]);
    return m;
}

ProductAtom make_atom(double weight, std::vector<cplx> a, std::vector<cplx> b) {
    ComplexMatrix proj = product_projector(a, b);
    return ProductAtom{weight, std::move(a), std::move(b), std::move(proj)};
}

ComplexMatrix atoms_to_matrix(const std::vector<ProductAtom>& atoms, std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (const auto& atom : atoms) m += atom.weight * atom.projector;
    return m;
}

// Tr(rho log2 rho) from the spectrum; the constant part of the objective.
double rho_log_term(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s += x * std::log2(x);
    return s;
}

struct Objective {
    const DensityMatrix& rho;
    double support_epsilon;
    double constant;  // Tr(rho log2 rho)

    ComplexMatrix regularize(const ComplexMatrix& sigma) const {
        const std::size_t d = sigma.rows();
        ComplexMatrix reg = sigma;
        reg *= cplx{1.0 - support_epsilon, 0.0};
        const double lift = support_epsilon / static_cast<double>(d);
        for (std::size_t i = 0; i < d; ++i) reg(i, i) += lift;
        return reg;
    }

    // f(sigma) = Tr(rho log2 rho) - Tr(rho log2 sigma_reg)
    double value(const ComplexMatrix& sigma) const {
        const Spectrum spec = hermitian_eig(regularize(sigma));
        const std::size_t d = spec.eigenvalues.size();
        double cross = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            // diagonal overlap <u_k| rho |u_k>
            double overlap = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                cplx acc{0.0, 0.0};
                for (std::size_t j = 0; j < d; ++j)
                    acc += rho.mat()(i, j) * spec.vectors(j, k);
                overlap += (std::conj(spec.vectors(i, k)) * acc).real();
            }
            cross += std::log2(std::max(spec.eigenvalues[k], 1e-300)) * overlap;
        }
        return constant - cross;
    }

    // Value and gradient from one shared eigendecomposition. The gradient
    // is the Fréchet derivative of -Tr(rho log2 .) through the
    // regularization map.
    double value_and_gradient(const ComplexMatrix& sigma, ComplexMatrix& grad_out) const {
        const Spectrum spec = hermitian_eig(regularize(sigma));
        const std::size_t d = spec.eigenvalues.size();
        const ComplexMatrix p = spec.vectors.dagger() * rho.mat() * spec.vectors;

        double cross = 0.0;
        for (std::size_t k = 0; k < d; ++k)
            cross += std::log2(std::max(spec.eigenvalues[k], 1e-300)) * p(k, k).real();

        ComplexMatrix k(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                const double sr = spec.eigenvalues[r], sc = spec.eigenvalues[c];
                double phi;
                if (std::abs(sr - sc) < 1e-14 * std::max(sr, sc)) {
                    phi = 2.0 / (sr + sc);
                } else {
                    phi = (std::log(sr) - std::log(sc)) / (sr - sc);
                }
                k(r, c) = p(r, c) * phi;
            }
        grad_out = spec.vectors * k * spec.vectors.dagger();
        grad_out *= cplx{-(1.0 - support_epsilon) / kLn2, 0.0};
        return constant - cross;
    }

    ComplexMatrix gradient(const ComplexMatrix& sigma) const {
        ComplexMatrix g;
        value_and_gradient(sigma, g);
        return g;
    }
};

std::vector<cplx> min_eigvec(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 2) {
        // closed form for the Hermitian 2x2
        const double a = m(0, 0).real(), c = m(1, 1).real();
        const cplx b = m(0, 1);
        const double half = 0.5 * (a - c);
        const double r = std::hypot(half, std::abs(b));
        if (r < 1e-300) return {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
        const double lam = 0.5 * (a + c) - r;
        // two algebraically equivalent eigenvector forms; take the one
        // with the larger norm ((lam-a)(lam-c) = |b|^2 ties them together)
        cplx v0, v1;
        if (std::abs(lam - c) > std::abs(lam - a)) {
            v0 = lam - c;
            v1 = std::conj(b);
        } else {
            v0 = b;
            v1 = lam - a;
        }
        const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
        if (norm < 1e-300) return {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
        return {v0 / norm, v1 / norm};
    }
    const Spectrum spec = hermitian_eig(m);
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = spec.vectors(i, n - 1);
    return v;
}

// <ab| g |ab> for unit product vectors
double product_expectation(const ComplexMatrix& g, const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
    const std::size_t da = a.size(), db = b.size();
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k)
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t l = 0; l < db; ++l)
                    acc += std::conj(a[i] * b[k]) * g(i * db + k, j * db + l) * (a[j] * b[l]);
    return acc.real();
}

// Alternating minimization of <ab|G|ab> from a fixed |b> start.
std::pair<double, std::pair<std::vector<cplx>, std::vector<cplx>>> polish_product(
    const ComplexMatrix& g, std::size_t da, std::size_t db, std::vector<cplx> b) {
    std::vector<cplx> a(da, cplx{0.0, 0.0});
    double value = 0.0, prev = 0.0;
    for (int it = 0; it < 100; ++it) {
        ComplexMatrix ma(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                cplx acc{0.0, 0.0};
                for (std::size_t k = 0; k < db; ++k)
                    for (std::size_t l = 0; l < db; ++l)
                        acc += std::conj(b[k]) * g(i * db + k, j * db + l) * b[l];
                ma(i, j) = acc;
            }
        a = min_eigvec(ma);

        ComplexMatrix mb(db, db);
        for (std::size_t k = 0; k < db; ++k)
            for (std::size_t l = 0; l < db; ++l) {
                cplx acc{0.0, 0.0};
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < da; ++j)
                        acc += std::conj(a[i]) * g(i * db + k, j * db + l) * a[j];
                mb(k, l) = acc;
            }
        b = min_eigvec(mb);
        value = product_expectation(g, a, b);
        if (it > 0 && prev - value < 1e-15 * std::max(1.0, std::abs(value))) break;
        prev = value;
    }
    return {value, {std::move(a), std::move(b)}};
}

std::vector<cplx> random_unit(GaussianStream& rng, std::size_t n) {
    std::vector<cplx> v(n);
    double norm2 = 0.0;
    for (auto& x : v) {
        x = rng.complex_normal();
        norm2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

// Schmidt pairs of a state vector reshaped to dim_a x dim_b, strongest
// first; used both for the warm start and for pure-state atoms.
struct SchmidtPair {
    double weight;  // squared Schmidt coefficient
    std::vector<cplx> a, b;
};

std::vector<SchmidtPair> schmidt_pairs(const std::vector<cplx>& psi, std::size_t da,
                                       std::size_t db) {
    ComplexMatrix m(da, db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k) m(i, k) = psi[i * db + k];
    const ComplexMatrix mmd = m * m.dagger();
    const Spectrum spec = hermitian_eig(mmd);

    std::vector<SchmidtPair> pairs;
    for (std::size_t k = 0; k < da; ++k) {
        const double lam = std::max(0.0, spec.eigenvalues[k]);
        if (lam < 1e-14) continue;
        SchmidtPair pair;
        pair.weight = lam;
        pair.a.resize(da);
        for (std::size_t i = 0; i < da; ++i) pair.a[i] = spec.vectors(i, k);
        pair.b.assign(db, cplx{0.0, 0.0});
        // b = M† a / sqrt(lambda)
        const double inv = 1.0 / std::sqrt(lam);
        for (std::size_t l = 0; l < db; ++l) {
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < da; ++i) acc += std::conj(m(i, l)) * pair.a[i];
            pair.b[l] = std::conj(acc) * inv;
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

// Separable warm start: each eigenvector of rho dephased in its own
// Schmidt basis, plus a small computational-basis floor.
std::vector<ProductAtom> initial_atoms(const DensityMatrix& rho) {
    const std::size_t da = rho.dim_a(), db = rho.dim_b(), d = rho.dim();
    const Spectrum spec = hermitian_eig(rho.mat());

    std::vector<ProductAtom> atoms;
    constexpr double kFloor = 1e-6;
    double assigned = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double p = spec.eigenvalues[k];
        if (p < 1e-12) continue;
        std::vector<cplx> psi(d);
        for (std::size_t i = 0; i < d; ++i) psi[i] = spec.vectors(i, k);
        for (auto& pair : schmidt_pairs(psi, da, db)) {
            const double w = (1.0 - kFloor) * p * pair.weight;
            if (w <= 0.0) continue;
            atoms.push_back(make_atom(w, std::move(pair.a), std::move(pair.b)));
            assigned += w;
        }
    }
    const double rest = 1.0 - assigned;
    const double each = rest / static_cast<double>(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k) {
            std::vector<cplx> a(da, cplx{0.0, 0.0}), b(db, cplx{0.0, 0.0});
            a[i] = 1.0;
            b[k] = 1.0;
            atoms.push_back(make_atom(each, std::move(a), std::move(b)));
        }
    return atoms;
}

double atom_overlap(const ProductAtom& x, const std::vector<cplx>& a,
                    const std::vector<cplx>& b) {
    cplx oa{0.0, 0.0}, ob{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) oa += std::conj(x.a[i]) * a[i];
    for (std::size_t k = 0; k < b.size(); ++k) ob += std::conj(x.b[k]) * b[k];
    return std::norm(oa) * std::norm(ob);
}

// Exponentiated-gradient descent of f over the weight simplex of the
// current atom set (atoms fixed). Pulls the iterate onto the optimal
// face far faster than weight transfer alone.
double reoptimize_weights(std::vector<ProductAtom>& atoms, const Objective& obj,
                          ComplexMatrix& sigma, double f_cur, int steps) {
    const std::size_t d = sigma.rows();
    for (int step = 0; step < steps; ++step) {
        const ComplexMatrix grad = obj.gradient(sigma);
        std::vector<double> score(atoms.size());
        double center = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            cplx acc{0.0, 0.0};
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) acc += atoms[i].projector(r, c) * grad(c, r);
            score[i] = acc.real();
            center += atoms[i].weight * score[i];
        }
        double spread = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            spread = std::max(spread, std::abs(score[i] - center));
        if (spread < 1e-14) break;

        bool improved = false;
        for (double eta = 2.0 / spread; eta > 0.02 / spread; eta *= 0.2) {
            std::vector<double> trial(atoms.size());
            double z = 0.0;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                trial[i] = atoms[i].weight * std::exp(-eta * (score[i] - center));
                z += trial[i];
            }
            ComplexMatrix mix(d, d);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                trial[i] /= z;
                mix += trial[i] * atoms[i].projector;
            }
            const double f_trial = obj.value(mix);
            if (f_trial < f_cur) {
                for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i].weight = trial[i];
                sigma = std::move(mix);
                f_cur = f_trial;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    std::erase_if(atoms, [](const ProductAtom& at) { return at.weight < 1e-12; });
    return f_cur;
}

}  // namespace

ReeResult ree(const DensityMatrix& rho, const ReeConfig& cfg) {
    if (!rho.is_two_qubit() && !rho.is_qubit_qutrit())
        throw DimensionError("ree: supported splits are 2x2 and 2x3");
    if (!(cfg.gap_tolerance > 0.0)) throw InvalidSpecError("ree: gap_tolerance must be positive");
    if (!(cfg.support_epsilon > 0.0) || cfg.support_epsilon > 1e-6)
        throw InvalidSpecError("ree: support_epsilon must be in (0, 1e-6]");

    const std::size_t da = rho.dim_a(), db = rho.dim_b(), d = rho.dim();
    const Spectrum rho_spec = hermitian_eig(rho.mat());
    Objective obj{rho, cfg.support_epsilon, rho_log_term(rho_spec.eigenvalues)};

    std::vector<ProductAtom> atoms = initial_atoms(rho);
    ComplexMatrix sigma = atoms_to_matrix(atoms, d);

    GaussianStream rng(0x5EE0A7C1E5ULL);
    std::vector<cplx> warm_b;

    ReeResult res;
    ComplexMatrix grad;
    double f_cur = obj.value_and_gradient(sigma, grad);
    double gap = 0.0;

    auto trace_product = [d](const ComplexMatrix& x, const ComplexMatrix& y) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) acc += x(i, j) * y(j, i);
        return acc.real();
    };

    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        res.iterations = iter + 1;

        // linear minimization oracle over pure product states
        double best_val = 0.0;
        std::vector<cplx> best_a, best_b;
        bool have = false;
        auto consider = [&](std::vector<cplx> b0) {
            auto [val, ab] = polish_product(grad, da, db, std::move(b0));
            if (!have || val < best_val) {
                best_val = val;
                best_a = std::move(ab.first);
                best_b = std::move(ab.second);
                have = true;
            }
        };
        if (!warm_b.empty()) consider(warm_b);
        consider(min_eigvec(partial_trace(grad, da, db, Subsystem::A)));
        for (std::size_t r = 0; r < cfg.oracle_restarts; ++r) consider(random_unit(rng, db));
        warm_b = best_b;

        // duality gap at the current iterate
        gap = std::max(0.0, trace_product(sigma, grad) - best_val);
        if (gap <= cfg.gap_tolerance) {
            res.converged = true;
            break;
        }
        res.converged = false;

        const ComplexMatrix fw_proj = product_projector(best_a, best_b);

        // away atom: the support atom with the steepest ascent score;
        // transferring its weight to the oracle atom sidesteps the
        // classic Frank-Wolfe zigzag at boundary optima
        std::size_t away = atoms.size();
        double away_score = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i].weight <= 1e-15) continue;
            const double score = trace_product(atoms[i].projector, grad);
            if (away == atoms.size() || score > away_score) {
                away = i;
                away_score = score;
            }
        }

        // golden-section minimization of the convex restriction
        // f(sigma + g*dir) over [0, hi]; directions with nonnegative
        // slope are skipped using the gradient already in hand
        auto line_search = [&](const ComplexMatrix& dir, double hi) {
            const double slope = trace_product(dir, grad);
            if (!(slope < 0.0) || !(hi > 0.0)) return std::pair<double, double>{0.0, f_cur};
            auto eval = [&](double g) {
                ComplexMatrix mix = sigma;
                mix += g * dir;
                return obj.value(mix);
            };
            constexpr double kInvPhi = 0.6180339887498949;
            double lo = 0.0, high = hi;
            double x1 = high - kInvPhi * (high - lo), x2 = lo + kInvPhi * (high - lo);
            double f1 = eval(x1), f2 = eval(x2);
            for (int ls = 0; ls < 16; ++ls) {
                if (f1 <= f2) {
                    high = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = high - kInvPhi * (high - lo);
                    f1 = eval(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + kInvPhi * (high - lo);
                    f2 = eval(x2);
                }
            }
            double g = f1 <= f2 ? x1 : x2;
            double fv = std::min(f1, f2);
            const double f_hi = eval(hi);  // full transfer/drop step
            if (f_hi <= fv) {
                g = hi;
                fv = f_hi;
            }
            return std::pair<double, double>{g, fv};
        };

        double gamma = 0.0, f_next = f_cur;
        bool pairwise = false;
        if (away < atoms.size()) {
            ComplexMatrix dir = fw_proj;
            dir -= atoms[away].projector;
            auto [g, fv] = line_search(dir, atoms[away].weight);
            if (fv < f_next) {
                gamma = g;
                f_next = fv;
                pairwise = true;
            }
        }
        if (gamma == 0.0) {
            ComplexMatrix dir = fw_proj;
            dir -= sigma;
            auto [g, fv] = line_search(dir, 1.0);
            if (fv < f_next) {
                gamma = g;
                f_next = fv;
                pairwise = false;
            }
        }
        if (gamma <= 0.0) break;  // no descent left at this precision

        if (pairwise) {
            atoms[away].weight -= gamma;
        } else {
            for (auto& atom : atoms) atom.weight *= 1.0 - gamma;
        }
        std::erase_if(atoms, [](const ProductAtom& at) { return at.weight < 1e-12; });
        // merge into an existing atom when the oracle returned a near-duplicate
        bool merged = false;
        for (auto& atom : atoms) {
            if (atom_overlap(atom, best_a, best_b) > 1.0 - 1e-7) {
                atom.weight += gamma;
                merged = true;
                break;
            }
        }
        if (!merged) atoms.push_back(make_atom(gamma, best_a, best_b));

        // keep the support compact: beyond ~2 d^2 atoms the smallest
        // weights are redundant decompositions of the same face
        if (atoms.size() > 2 * d * d) {
            std::sort(atoms.begin(), atoms.end(),
                      [](const ProductAtom& x, const ProductAtom& y) {
                          return x.weight > y.weight;
                      });
            double dropped = 0.0;
            while (atoms.size() > 2 * d * d && atoms.back().weight < 1e-7) {
                dropped += atoms.back().weight;
                atoms.pop_back();
            }
            if (dropped > 0.0) {
                const double scale = 1.0 / (1.0 - dropped);
                for (auto& atom : atoms) atom.weight *= scale;
            }
        }

        sigma = atoms_to_matrix(atoms, d);
        f_cur = obj.value(sigma);
        // corrective pass: periodically re-solve the weight subproblem on
        // the current atom set
        if (res.iterations % 10 == 0) f_cur = reoptimize_weights(atoms, obj, sigma, f_cur, 12);
        f_cur = obj.value_and_gradient(sigma, grad);
    }

    res.value = std::max(0.0, f_cur);
    res.gap = gap;
    return res;
}

std::optional<double> MeasureRecord::get(const std::string& name) const {
    if (name == "concurrence" || name == "C") return concurrence;
    if (name == "c_max") return c_max;
    if (name == "negativity" || name == "N") return negativity;
    if (name == "log_negativity") return log_negativity;
    if (name == "neg_eig") return neg_eig;
    if (name == "eof" || name == "E_F") return eof;
    if (name == "ree" || name == "E") return ree;
    if (name == "ree_gap") return ree_gap;
    throw MissingMeasureError("unknown measure: " + name);
}

MeasureRecord measure_all(const DensityMatrix& rho, const ReeConfig& cfg,
                          const MeasureSelection& select) {
    if (!rho.is_two_qubit() && !rho.is_qubit_qutrit())
        throw DimensionError("measure_all: supported splits are 2x2 and 2x3");

    MeasureRecord rec;
    if (select.negativity) rec.negativity = negativity(rho);
    if (select.log_negativity) rec.log_negativity = log_negativity(rho);
    rec.negativity_trace_norm = negativity_trace_norm(rho);
    if (select.ree) {
        const ReeResult r = ree(rho, cfg);
        rec.ree = r.value;
        rec.ree_gap = r.gap;
        rec.ree_converged = r.converged;
    }
    if (rho.is_two_qubit()) {
        if (select.concurrence) rec.concurrence = concurrence(rho);
        if (select.c_max) rec.c_max = max_concurrence(rho);
        if (select.neg_eig) rec.neg_eig = neg_eig_measure(rho);
        if (select.eof) rec.eof = eof(rho);
    }
    return rec;
}

}  // namespace entb
