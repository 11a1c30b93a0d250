#pragma once

// Renyi and Tsallis entropies in nats. Conventions: 0 * ln 0 = 0 and
// 0^alpha = 0, so zero probabilities drop out of every sum.

#include "kdf/linalg.hpp"
#include "kdf/probability.hpp"

namespace kdf {

/// Entropy order alpha in (0, inf]. alpha = 1 (Shannon) and alpha = inf
/// (min-entropy) are exact special cases.
class AlphaOrder {
public:
    /// Throws DomainError unless value > 0 (infinity allowed).
    explicit AlphaOrder(double value);
    static AlphaOrder infinity() { return AlphaOrder(kInfinity); }

    double value() const noexcept { return value_; }
    bool is_infinite() const noexcept;
    /// True for alpha within 1e-6 of one, where the Shannon branch is used.
    bool is_shannon() const noexcept;

private:
    double value_;
};

/// ln_alpha(xi) = (xi^(1-alpha) - 1) / (1 - alpha), ln xi at alpha = 1.
double alpha_log(double xi, AlphaOrder alpha);

double shannon_entropy(const ProbabilityVector& p);
double renyi_entropy(const ProbabilityVector& p, AlphaOrder alpha);
/// Throws DomainError for alpha = inf.
double tsallis_entropy(const ProbabilityVector& p, AlphaOrder alpha);

/// sum_j p_j^2
double index_of_coincidence(const ProbabilityVector& p);

/// Lower bound on R_alpha, alpha in [2, inf], interpolating the collision
/// (r2) and min- (rinf) entropies:
///   (alpha-2)/(alpha-1) * rinf + 1/(alpha-1) * r2.
/// Requires r2 >= rinf >= 0 (up to kStructuralTol).
double renyi_interpolation_bound(double r2, double rinf, AlphaOrder alpha);

/// True if q is majorized by p (both padded with zeros to a common length).
bool is_majorized_by(const ProbabilityVector& q, const ProbabilityVector& p, double tol = kNumericTol);

} // namespace kdf
