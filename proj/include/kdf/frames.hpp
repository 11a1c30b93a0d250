#pragma once

// Finite frames of unit kets, tight and equiangular frames, and the POVMs
// and states built from them.

#include "kdf/linalg.hpp"
#include "kdf/probability.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kdf {

/// Ordered list of n >= d unit kets in C^d. Reordering gives a different frame.
class Frame {
public:
    /// `kets` is n x d, row j holding the amplitudes of |phi_j>. Throws
    /// ValidationError unless every row has unit norm within `tol` and n >= d.
    explicit Frame(ComplexMatrix kets, double tol = kStructuralTol);
    Frame(std::size_t d, const std::vector<std::vector<cplx>>& kets, double tol = kStructuralTol);

    std::size_t dim() const noexcept { return kets_.cols(); }
    std::size_t size() const noexcept { return kets_.rows(); }
    std::span<const cplx> ket(std::size_t j) const { return kets_.row(j); }
    const ComplexMatrix& kets() const noexcept { return kets_; }

    /// |phi_j><phi_j|
    ComplexMatrix projector(std::size_t j) const;
    /// G_ij = <phi_i|phi_j>
    ComplexMatrix gram() const;

private:
    ComplexMatrix kets_;
};

/// n, d, S = n/d and the coherence c = (n - d)/((n - 1) d).
struct EtfParameters {
    std::size_t n = 0;
    std::size_t d = 0;
    double S = 0.0;
    double c = 0.0;

    static EtfParameters of(std::size_t n, std::size_t d);
    static EtfParameters of(const Frame& f) { return of(f.size(), f.dim()); }
};

/// (n - d)/((n - 1) d); zero when n = d. Throws DomainError if n < d.
double coherence_constant(std::size_t n, std::size_t d);

/// Positive operators summing to the identity.
class Povm {
public:
    /// Throws ValidationError if an element is not PSD (min eigenvalue below
    /// -tol_psd) or the sum differs from I by more than tol_sum entrywise.
    explicit Povm(std::vector<HermitianMatrix> elements, double tol_psd = kStructuralTol,
                  double tol_sum = kNumericTol);

    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t dim() const noexcept { return elements_.front().dim(); }
    const HermitianMatrix& operator[](std::size_t j) const { return elements_[j]; }
    const std::vector<HermitianMatrix>& elements() const noexcept { return elements_; }

private:
    std::vector<HermitianMatrix> elements_;
};

/// Unit-trace PSD matrix.
class DensityMatrix {
public:
    /// Throws ValidationError unless |tr - 1| <= tol and min eigenvalue >= -tol.
    explicit DensityMatrix(const ComplexMatrix& m, double tol = kStructuralTol);
    explicit DensityMatrix(const HermitianMatrix& m, double tol = kStructuralTol);

    static DensityMatrix maximally_mixed(std::size_t d);
    /// |psi><psi| for a unit ket.
    static DensityMatrix pure(std::span<const cplx> psi, double tol = kStructuralTol);

    std::size_t dim() const noexcept { return rho_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return rho_; }
    const ComplexMatrix& matrix() const noexcept { return rho_.matrix(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

private:
    HermitianMatrix rho_;
};

/// S = sum_j |phi_j><phi_j|
HermitianMatrix frame_operator(const Frame& f);

/// Frobenius distance of the frame operator from (n/d) I, relative to n/d.
double tightness_defect(const Frame& f);
bool is_tight(const Frame& f, double tol = kNumericTol);

/// Common value of |<phi_i|phi_j>|^2 over i != j, if all pairs agree within tol.
std::optional<double> is_equiangular(const Frame& f, double tol = kNumericTol);

/// E_j = (d/n) |phi_j><phi_j|; throws ValidationError for a non-tight frame.
Povm povm_from_frame(const Frame& f, double tol = kNumericTol);

/// tr(E_j rho)
ProbabilityVector outcome_probabilities(const Povm& p, const DensityMatrix& rho);

/// |phi_0> = |0>, sqrt(3)|phi_k> = |0> + sqrt(2) w^(k-1) |1>, w = e^(2 pi i/3).
Frame sic_qubit();

/// Computational basis of C^d.
Frame orthonormal_basis(std::size_t d);

/// Naimark complement: n unit kets in C^(n-d), tight and equiangular when f
/// is. Built from the projector I_n - (d/n) G onto the orthogonal complement
/// of the row space of the synthesis operator.
Frame complement_etf(const Frame& f, double tol = kNumericTol);

/// sum_j nu_j |phi_j><phi_j|
DensityMatrix frame_mixture(const Frame& f, std::span<const double> weights);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

// Sampling helpers for Monte Carlo checks.

/// Hilbert-Schmidt-random state of the given rank (rank = d for full rank).
DensityMatrix random_density_matrix(std::size_t d, Rng& rng, std::size_t rank = 0);
/// Haar-random pure state.
DensityMatrix random_pure_state(std::size_t d, Rng& rng);
/// Uniform point on the probability simplex (flat Dirichlet).
std::vector<double> random_weights(std::size_t n, Rng& rng);

} // namespace kdf
