#include "kdf/bounds.hpp"

#include "kdf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

namespace kdf {

namespace {

/// sqrt of a radicand that is non-negative in exact arithmetic. Values within
/// tol * scale below zero are rounding; anything further is an invalid input.
double guarded_sqrt(double radicand, double scale, const char* what) {
    const double tol = kStructuralTol * std::max(1.0, scale);
    if (radicand < -tol) {
        throw NumericalError(std::string(what) + ": negative radicand " + std::to_string(radicand));
    }
    return std::sqrt(std::max(radicand, 0.0));
}

void require_purity(const EtfParameters& p, double purity, const char* what) {
    const double lo = 1.0 / static_cast<double>(p.d) - kStructuralTol;
    const double hi = 1.0 + kStructuralTol;
    if (!(purity >= lo && purity <= hi)) {
        throw DomainError(std::string(what) + ": purity " + std::to_string(purity) + " outside [1/d, 1]");
    }
}

/// Location interval for values x_1..x_n with sum s1:
/// center s1/n, radius sqrt(n-1)/n * sqrt(n s2 - s1^2).
/// `centered_sq` is sum (x_i - s1/n)^2, so n s2 - s1^2 = n * centered_sq without
/// the cancellation that a degenerate spectrum would otherwise suffer.
Interval location_interval(std::size_t n, double s1, double centered_sq) {
    const double nn = static_cast<double>(n);
    const double radius = std::sqrt(nn - 1.0) / nn * std::sqrt(nn * centered_sq);
    return Interval::centered(s1 / nn, radius);
}

double centered_sum_sq(std::span<const double> xs, double mean) {
    double out = 0.0;
    for (double x : xs) {
        out += (x - mean) * (x - mean);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Interval / BoundReport
// ---------------------------------------------------------------------------

Interval Interval::of(double lower, double upper) {
    if (!(lower <= upper)) {
        throw ValidationError("Interval: lower " + std::to_string(lower) + " exceeds upper " + std::to_string(upper));
    }
    return Interval{lower, upper};
}

double Interval::slack(double x) const noexcept { return std::min(x - lower, upper - x); }

Interval Interval::intersect(const Interval& other) const {
    return of(std::max(lower, other.lower), std::min(upper, other.upper));
}

BoundReport BoundReport::upper(double bound, double achieved, double saturation_tol) {
    const double slack = bound - achieved;
    return {BoundDirection::upper, bound, achieved, slack, std::abs(slack) <= saturation_tol};
}

BoundReport BoundReport::lower(double bound, double achieved, double saturation_tol) {
    const double slack = achieved - bound;
    return {BoundDirection::lower, bound, achieved, slack, std::abs(slack) <= saturation_tol};
}

// ---------------------------------------------------------------------------
// ETF closed forms
// ---------------------------------------------------------------------------

double ic_upper_bound(const EtfParameters& p, double purity) {
    require_purity(p, purity, "ic_upper_bound");
    return (p.S * p.c + (1.0 - p.c) * purity) / (p.S * p.S);
}

double lambda_hs_norm_sq(const EtfParameters& p, double ic, double purity) {
    require_purity(p, purity, "lambda_hs_norm_sq");
    if (!(ic > 0.0 && ic <= 1.0 + kStructuralTol)) {
        throw DomainError("lambda_hs_norm_sq: index of coincidence " + std::to_string(ic) + " outside (0, 1]");
    }
    return (1.0 - p.c) * ic + p.c * purity;
}

double pi_hs_norm(const EtfParameters& p, double ic, double purity) {
    const double ratio = static_cast<double>(p.d) / static_cast<double>(p.n);
    return ratio * std::sqrt(lambda_hs_norm_sq(p, ic, purity));
}

double lambda_hs_norm_sq_bound(const EtfParameters& p, double purity) {
    require_purity(p, purity, "lambda_hs_norm_sq_bound");
    const double one_c = 1.0 - p.c;
    return one_c * p.c / p.S + (one_c * one_c / (p.S * p.S) + p.c) * purity;
}

Interval etf_eigen_interval(const EtfParameters& p, double purity) {
    require_purity(p, purity, "etf_eigen_interval");
    const double n = static_cast<double>(p.n);
    const double d = static_cast<double>(p.d);
    const double one_c = 1.0 - p.c;
    const double radicand = (one_c * one_c / (p.S * p.S) + p.c) * n * purity + one_c * p.c * d - 1.0;
    const double radius = std::sqrt(n - 1.0) / n * guarded_sqrt(radicand, n, "etf_eigen_interval");
    return Interval::centered(1.0 / n, radius);
}

double etf_spectral_bound(const EtfParameters& p, double purity) { return etf_eigen_interval(p, purity).upper; }

double renyi_uncertainty_bound(const EtfParameters& p, double purity, AlphaOrder alpha) {
    if (alpha.value() < 2.0) {
        throw DomainError("renyi_uncertainty_bound: order must be in [2, inf], got " + std::to_string(alpha.value()));
    }
    const double r2 = -std::log(lambda_hs_norm_sq_bound(p, purity));
    const double rinf = -std::log(etf_spectral_bound(p, purity));
    return renyi_interpolation_bound(r2, rinf, alpha);
}

double tsallis_uncertainty_bound(const EtfParameters& p, double purity, AlphaOrder alpha) {
    if (alpha.is_infinite() || alpha.value() > 2.0) {
        throw DomainError("tsallis_uncertainty_bound: order must be in (0, 2], got " + std::to_string(alpha.value()));
    }
    require_purity(p, purity, "tsallis_uncertainty_bound");
    const double one_c = 1.0 - p.c;
    const double s2 = p.S * p.S;
    const double denom = one_c * p.c * p.S + (one_c * one_c + p.c * s2) * purity;
    return alpha_log(s2 / denom, alpha);
}

long pure_state_bound_margin_scaled(long n, long d) {
    if (d < 2) {
        throw DomainError("pure_state_bound_margin: need d >= 2, got " + std::to_string(d));
    }
    if (n < d) {
        throw DomainError("pure_state_bound_margin: need n >= d");
    }
    return (d - 1) * n * n - d * n - d * d * d + 2 * d * d;
}

double pure_state_bound_margin(long n, long d) {
    return static_cast<double>(pure_state_bound_margin_scaled(n, d)) / static_cast<double>(d);
}

// ---------------------------------------------------------------------------
// general location estimates
// ---------------------------------------------------------------------------

Interval eigen_interval(const HermitianMatrix& m) {
    // ||m - (tr/n) I||_F^2 equals sum (lambda_i - tr/n)^2 without an eigensolve.
    const std::size_t n = m.dim();
    const double mean = m.trace() / static_cast<double>(n);
    ComplexMatrix shifted = m.matrix();
    for (std::size_t i = 0; i < n; ++i) {
        shifted(i, i) -= mean;
    }
    const double dev = frobenius_norm(shifted);
    return location_interval(n, m.trace(), dev * dev);
}

Interval singular_interval(const ComplexMatrix& x) {
    const std::size_t n = std::min(x.rows(), x.cols());
    if (n == 0) {
        throw DimensionError("singular_interval: empty matrix");
    }
    const std::vector<double> sv = singular_values(x);
    const double trace_norm = std::accumulate(sv.begin(), sv.end(), 0.0);
    return location_interval(n, trace_norm, centered_sum_sq(sv, trace_norm / static_cast<double>(n)));
}

double max_eig_upper_bound(const HermitianMatrix& m) {
    const Spectrum spec = hermitian_eig(m);
    const double low = spec.eigenvalues.back();
    if (low < -kStructuralTol * std::max(1.0, frobenius_norm(m.matrix()))) {
        throw ValidationError("max_eig_upper_bound: matrix is not PSD (eigenvalue " + std::to_string(low) + ")");
    }
    std::vector<double> moduli(spec.eigenvalues.size());
    std::transform(spec.eigenvalues.begin(), spec.eigenvalues.end(), moduli.begin(),
                   [](double v) { return std::abs(v); });
    const double trace_norm = std::accumulate(moduli.begin(), moduli.end(), 0.0);
    const double n = static_cast<double>(m.dim());
    return location_interval(m.dim(), trace_norm, centered_sum_sq(moduli, trace_norm / n)).upper;
}

std::vector<GershgorinDisk> gershgorin_disks(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("gershgorin_disks: matrix must be square");
    }
    std::vector<GershgorinDisk> disks(m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        double r = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != k) {
                r += std::abs(m(k, j));
            }
        }
        disks[k] = {m(k, k), r};
    }
    return disks;
}

std::vector<Interval> gershgorin_real_union(const std::vector<GershgorinDisk>& disks) {
    std::vector<Interval> pieces;
    pieces.reserve(disks.size());
    for (const auto& disk : disks) {
        pieces.push_back(Interval::centered(disk.center.real(), disk.radius));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
    std::vector<Interval> merged;
    for (const auto& piece : pieces) {
        if (!merged.empty() && piece.lower <= merged.back().upper) {
            merged.back().upper = std::max(merged.back().upper, piece.upper);
        } else {
            merged.push_back(piece);
        }
    }
    return merged;
}

Interval gershgorin_hull(const std::vector<GershgorinDisk>& disks) {
    const auto pieces = gershgorin_real_union(disks);
    if (pieces.empty()) {
        throw DimensionError("gershgorin_hull: no disks");
    }
    return Interval::of(pieces.front().lower, pieces.back().upper);
}

} // namespace kdf
