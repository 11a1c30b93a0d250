#include "kdf/frames.hpp"

#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace kdf {

// ---------------------------------------------------------------------------
// Frame
// ---------------------------------------------------------------------------

Frame::Frame(ComplexMatrix kets, double tol) : kets_(std::move(kets)) {
    if (kets_.cols() == 0) {
        throw ValidationError("Frame: dimension must be positive");
    }
    if (kets_.rows() < kets_.cols()) {
        throw ValidationError("Frame: " + std::to_string(kets_.rows()) + " vectors cannot span C^" +
                              std::to_string(kets_.cols()));
    }
    for (std::size_t j = 0; j < kets_.rows(); ++j) {
        const double norm = std::sqrt(kernels::norm_sq(kets_.row(j).data(), kets_.cols()));
        if (std::abs(norm - 1.0) > tol) {
            throw ValidationError("Frame: vector " + std::to_string(j) + " has norm " + std::to_string(norm));
        }
    }
}

namespace {

ComplexMatrix stack_kets(std::size_t d, const std::vector<std::vector<cplx>>& kets) {
    std::vector<cplx> data;
    data.reserve(kets.size() * d);
    for (std::size_t j = 0; j < kets.size(); ++j) {
        if (kets[j].size() != d) {
            throw DimensionError("Frame: vector " + std::to_string(j) + " has " + std::to_string(kets[j].size()) +
                                 " components, expected " + std::to_string(d));
        }
        data.insert(data.end(), kets[j].begin(), kets[j].end());
    }
    return ComplexMatrix(kets.size(), d, std::move(data));
}

} // namespace

Frame::Frame(std::size_t d, const std::vector<std::vector<cplx>>& kets, double tol)
    : Frame(stack_kets(d, kets), tol) {}

ComplexMatrix Frame::projector(std::size_t j) const { return ComplexMatrix::outer(ket(j), ket(j)); }

ComplexMatrix Frame::gram() const {
    const std::size_t n = size();
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = kernels::dotc(ket(i).data(), ket(j).data(), dim());
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// parameters
// ---------------------------------------------------------------------------

double coherence_constant(std::size_t n, std::size_t d) {
    if (d == 0 || n < d) {
        throw DomainError("coherence_constant: need n >= d >= 1, got n=" + std::to_string(n) +
                          " d=" + std::to_string(d));
    }
    if (n == d) {
        return 0.0;
    }
    return static_cast<double>(n - d) / (static_cast<double>(n - 1) * static_cast<double>(d));
}

EtfParameters EtfParameters::of(std::size_t n, std::size_t d) {
    EtfParameters p;
    p.n = n;
    p.d = d;
    p.c = coherence_constant(n, d);
    p.S = static_cast<double>(n) / static_cast<double>(d);
    return p;
}

// ---------------------------------------------------------------------------
// Povm and DensityMatrix
// ---------------------------------------------------------------------------

Povm::Povm(std::vector<HermitianMatrix> elements, double tol_psd, double tol_sum)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw ValidationError("Povm: no elements");
    }
    const std::size_t d = elements_.front().dim();
    ComplexMatrix total(d, d);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        if (elements_[j].dim() != d) {
            throw DimensionError("Povm: element " + std::to_string(j) + " has dimension " +
                                 std::to_string(elements_[j].dim()));
        }
        const double low = min_eigenvalue(elements_[j]);
        if (low < -tol_psd) {
            throw ValidationError("Povm: element " + std::to_string(j) + " has eigenvalue " + std::to_string(low));
        }
        total += elements_[j].matrix();
    }
    const double defect = max_abs_diff(total, ComplexMatrix::identity(d));
    if (defect > tol_sum) {
        throw ValidationError("Povm: elements sum to the identity only within " + std::to_string(defect));
    }
}

DensityMatrix::DensityMatrix(const HermitianMatrix& m, double tol) : rho_(m) {
    const double tr = rho_.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw ValidationError("DensityMatrix: trace is " + std::to_string(tr));
    }
    const double low = min_eigenvalue(rho_);
    if (low < -tol) {
        throw ValidationError("DensityMatrix: eigenvalue " + std::to_string(low) + " is negative");
    }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol) : DensityMatrix(HermitianMatrix(m, tol), tol) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    return DensityMatrix(ComplexMatrix::identity(d) * cplx{1.0 / static_cast<double>(d), 0.0});
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi, double tol) {
    return DensityMatrix(ComplexMatrix::outer(psi, psi), tol);
}

// ---------------------------------------------------------------------------
// frame operations
// ---------------------------------------------------------------------------

HermitianMatrix frame_operator(const Frame& f) {
    // S = Phi Phi^dagger with Phi the d x n synthesis matrix; kets() is Phi^T.
    const ComplexMatrix phi_t = f.kets();
    ComplexMatrix s = adjoint_times(phi_t, phi_t).transpose();
    return HermitianMatrix(s, 1e-10);
}

double tightness_defect(const Frame& f) {
    const double ratio = static_cast<double>(f.size()) / static_cast<double>(f.dim());
    const ComplexMatrix target = ComplexMatrix::identity(f.dim()) * cplx{ratio, 0.0};
    return frobenius_norm(frame_operator(f).matrix() - target) / ratio;
}

bool is_tight(const Frame& f, double tol) { return tightness_defect(f) <= tol; }

std::optional<double> is_equiangular(const Frame& f, double tol) {
    const std::size_t n = f.size();
    if (n < 2) {
        throw DomainError("is_equiangular: need at least two vectors");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double overlap = std::norm(kernels::dotc(f.ket(i).data(), f.ket(j).data(), f.dim()));
            lo = std::min(lo, overlap);
            hi = std::max(hi, overlap);
            sum += overlap;
        }
    }
    if (hi - lo > tol) {
        return std::nullopt;
    }
    return sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

Povm povm_from_frame(const Frame& f, double tol) {
    const double defect = tightness_defect(f);
    if (defect > tol) {
        throw ValidationError("povm_from_frame: frame is not tight (relative defect " + std::to_string(defect) + ")");
    }
    const cplx scale{static_cast<double>(f.dim()) / static_cast<double>(f.size()), 0.0};
    std::vector<HermitianMatrix> elements;
    elements.reserve(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        elements.emplace_back(f.projector(j) * scale);
    }
    return Povm(std::move(elements), kStructuralTol, tol);
}

ProbabilityVector outcome_probabilities(const Povm& p, const DensityMatrix& rho) {
    if (p.dim() != rho.dim()) {
        throw DimensionError("outcome_probabilities: POVM on C^" + std::to_string(p.dim()) + ", state on C^" +
                             std::to_string(rho.dim()));
    }
    std::vector<double> probs(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        // tr(E rho) = <E, rho>_hs since E is Hermitian.
        probs[j] = hs_inner(p[j].matrix(), rho.matrix()).real();
    }
    return ProbabilityVector(std::move(probs));
}

Frame sic_qubit() {
    const double r3 = std::sqrt(3.0);
    const double r2 = std::sqrt(2.0);
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return Frame(2, {{1.0, 0.0},
                     {1.0 / r3, r2 / r3},
                     {1.0 / r3, r2 * w / r3},
                     {1.0 / r3, r2 * std::conj(w) / r3}});
}

Frame orthonormal_basis(std::size_t d) { return Frame(ComplexMatrix::identity(d)); }

Frame complement_etf(const Frame& f, double tol) {
    const std::size_t n = f.size();
    const std::size_t d = f.dim();
    if (n == d) {
        throw DomainError("complement_etf: n = d leaves an empty complement");
    }
    if (!is_tight(f, tol)) {
        throw ValidationError("complement_etf: frame is not tight");
    }
    if (!is_equiangular(f, tol)) {
        throw ValidationError("complement_etf: frame is not equiangular");
    }
    // (d/n) G is the projector onto the row space of Phi; K is its complement.
    ComplexMatrix k = ComplexMatrix::identity(n) - f.gram() * cplx{static_cast<double>(d) / static_cast<double>(n), 0.0};
    const Spectrum spec = hermitian_eig(HermitianMatrix(k, 1e-10));
    const std::size_t m = n - d;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m) / static_cast<double>(n));

    // K = L^dagger L with L_kj = conj(V_jk) over the unit eigenvalues; the
    // columns of L, rescaled to unit norm, are the complement kets.
    ComplexMatrix kets(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t kk = 0; kk < m; ++kk) {
            kets(j, kk) = std::conj(spec.eigenvectors(j, kk)) * scale;
        }
    }
    return Frame(std::move(kets), tol);
}

DensityMatrix frame_mixture(const Frame& f, std::span<const double> weights) {
    if (weights.size() != f.size()) {
        throw DimensionError("frame_mixture: " + std::to_string(weights.size()) + " weights for " +
                             std::to_string(f.size()) + " vectors");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw ValidationError("frame_mixture: negative weight");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw ValidationError("frame_mixture: weights sum to " + std::to_string(total));
    }
    ComplexMatrix rho(f.dim(), f.dim());
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (weights[j] > 0.0) {
            rho += f.projector(j) * cplx{weights[j], 0.0};
        }
    }
    return DensityMatrix(rho);
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.matrix(), rho.matrix()).real(); }

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

DensityMatrix random_density_matrix(std::size_t d, Rng& rng, std::size_t rank) {
    if (rank == 0) {
        rank = d;
    }
    const ComplexMatrix g = ginibre(d, rank, rng);
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho *= cplx{1.0 / tr, 0.0};
    return DensityMatrix(rho);
}

DensityMatrix random_pure_state(std::size_t d, Rng& rng) { return random_density_matrix(d, rng, 1); }

std::vector<double> random_weights(std::size_t n, Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    for (auto& x : w) {
        x = expo(rng);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) {
        x /= total;
    }
    return w;
}

} // namespace kdf
