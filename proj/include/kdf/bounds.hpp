#pragma once

// Closed-form bounds for the principal unraveling of an equiangular tight
// frame, and the general eigenvalue-location estimates they are built on.

#include "kdf/entropy.hpp"
#include "kdf/frames.hpp"
#include "kdf/linalg.hpp"

#include <vector>

namespace kdf {

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    /// Throws ValidationError if lower > upper.
    static Interval of(double lower, double upper);
    static Interval centered(double center, double radius) { return of(center - radius, center + radius); }

    double center() const noexcept { return 0.5 * (lower + upper); }
    double radius() const noexcept { return 0.5 * (upper - lower); }
    bool contains(double x, double tol = 0.0) const noexcept { return x >= lower - tol && x <= upper + tol; }
    /// Distance by which x lies inside (positive) or outside (negative).
    double slack(double x) const noexcept;
    Interval intersect(const Interval& other) const;
};

enum class BoundDirection { upper, lower };

/// A bound next to the value it constrains. slack = bound - achieved for an
/// upper bound and achieved - bound for a lower bound, so a holding bound has
/// non-negative slack.
struct BoundReport {
    BoundDirection direction = BoundDirection::upper;
    double bound_value = 0.0;
    double achieved_value = 0.0;
    double slack = 0.0;
    bool saturated = false;

    static BoundReport upper(double bound, double achieved, double saturation_tol = kSaturationTol);
    static BoundReport lower(double bound, double achieved, double saturation_tol = kSaturationTol);
    bool holds(double tol = kNumericTol) const noexcept { return slack >= -tol; }
};

struct GershgorinDisk {
    cplx center;
    double radius = 0.0;
};

// ---------------------------------------------------------------------------
// ETF closed forms (purity is validated against [1/d, 1])
// ---------------------------------------------------------------------------

/// Upper bound on the index of coincidence: [S c + (1 - c) purity] / S^2.
double ic_upper_bound(const EtfParameters& params, double purity);

/// ||Lambda||_2^2 of the principal unraveling: (1 - c) ic + c purity.
double lambda_hs_norm_sq(const EtfParameters& params, double ic, double purity);

/// ||Pi||_2 = (d/n) ||Lambda||_2.
double pi_hs_norm(const EtfParameters& params, double ic, double purity);

/// Right-hand side of ||Lambda||_2^2 <= (1-c)c/S + ((1-c)^2/S^2 + c) purity,
/// valid for every unraveling of the principal channel.
double lambda_hs_norm_sq_bound(const EtfParameters& params, double purity);

/// Interval around 1/n containing every eigenvalue of Lambda(B; rho) for any
/// unraveling B of the principal channel.
Interval etf_eigen_interval(const EtfParameters& params, double purity);

/// 1/n + radius of etf_eigen_interval; bounds ||Lambda(B; rho)||_inf.
double etf_spectral_bound(const EtfParameters& params, double purity);

/// Lower bound on R_alpha(B; rho), alpha in [2, inf], obtained by
/// interpolating -ln(lambda_hs_norm_sq_bound) and -ln(etf_spectral_bound).
double renyi_uncertainty_bound(const EtfParameters& params, double purity, AlphaOrder alpha);

/// Lower bound on H_alpha(B; rho), alpha in (0, 2]:
///   ln_alpha( S^2 / [(1-c) c S + ((1-c)^2 + c S^2) purity] ).
double tsallis_uncertainty_bound(const EtfParameters& params, double purity, AlphaOrder alpha);

/// ((d-1)/d) n^2 - n - d^2 + 2d. Positive for every n > d, which is what
/// keeps etf_spectral_bound below one on pure frame states.
double pure_state_bound_margin(long n, long d);

/// Exact integer d * pure_state_bound_margin(n, d).
long pure_state_bound_margin_scaled(long n, long d);

// ---------------------------------------------------------------------------
// general eigenvalue / singular value location
// ---------------------------------------------------------------------------

/// Center tr(m)/n, radius sqrt(n-1)/n * sqrt(n ||m||_2^2 - tr(m)^2).
/// Contains every eigenvalue; an eigenvalue is on the boundary iff the other
/// n - 1 eigenvalues coincide.
Interval eigen_interval(const HermitianMatrix& m);

/// Same construction with ||x||_1 in place of the trace; contains every
/// singular value. n = min(rows, cols).
Interval singular_interval(const ComplexMatrix& x);

/// (1/n)(||m||_1 + sqrt(n-1) sqrt(n ||m||_2^2 - ||m||_1^2)) for PSD m.
double max_eig_upper_bound(const HermitianMatrix& m);

/// Disk k: center m_kk, radius sum_{j != k} |m_kj|.
std::vector<GershgorinDisk> gershgorin_disks(const ComplexMatrix& m);

/// Connected pieces of the union of the disks' real-axis shadows, sorted.
/// For a Hermitian matrix these contain every eigenvalue.
std::vector<Interval> gershgorin_real_union(const std::vector<GershgorinDisk>& disks);

/// Smallest interval containing the union.
Interval gershgorin_hull(const std::vector<GershgorinDisk>& disks);

} // namespace kdf
