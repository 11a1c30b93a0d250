#include "kdf/entropy.hpp"

#include "kdf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace kdf {

namespace {

constexpr double kShannonWindow = 1e-6;

double power_sum(const ProbabilityVector& p, double alpha) {
    double acc = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            acc += std::pow(x, alpha);
        }
    }
    return acc;
}

} // namespace

AlphaOrder::AlphaOrder(double value) : value_(value) {
    if (!(value > 0.0)) {
        throw DomainError("entropy order must be positive, got " + std::to_string(value));
    }
}

bool AlphaOrder::is_infinite() const noexcept { return std::isinf(value_); }

bool AlphaOrder::is_shannon() const noexcept { return std::abs(value_ - 1.0) < kShannonWindow; }

double alpha_log(double xi, AlphaOrder alpha) {
    if (!(xi > 0.0)) {
        throw DomainError("alpha_log: argument must be positive, got " + std::to_string(xi));
    }
    if (alpha.is_infinite()) {
        throw DomainError("alpha_log: order must be finite");
    }
    if (alpha.is_shannon()) {
        return std::log(xi);
    }
    const double a = alpha.value();
    // expm1 keeps precision when xi^(1-a) is close to one.
    return std::expm1((1.0 - a) * std::log(xi)) / (1.0 - a);
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

double renyi_entropy(const ProbabilityVector& p, AlphaOrder alpha) {
    if (alpha.is_infinite()) {
        return -std::log(p.max());
    }
    if (alpha.is_shannon()) {
        return shannon_entropy(p);
    }
    const double a = alpha.value();
    return std::log(power_sum(p, a)) / (1.0 - a);
}

double tsallis_entropy(const ProbabilityVector& p, AlphaOrder alpha) {
    if (alpha.is_infinite()) {
        throw DomainError("tsallis_entropy: order must be finite");
    }
    if (alpha.is_shannon()) {
        return shannon_entropy(p);
    }
    const double a = alpha.value();
    return (power_sum(p, a) - 1.0) / (1.0 - a);
}

double index_of_coincidence(const ProbabilityVector& p) {
    double acc = 0.0;
    for (double x : p) {
        acc += x * x;
    }
    return acc;
}

double renyi_interpolation_bound(double r2, double rinf, AlphaOrder alpha) {
    if (alpha.value() < 2.0) {
        throw DomainError("renyi_interpolation_bound: order must be in [2, inf], got " +
                          std::to_string(alpha.value()));
    }
    if (rinf < -kStructuralTol || r2 < rinf - kStructuralTol) {
        throw DomainError("renyi_interpolation_bound: need r2 >= rinf >= 0");
    }
    if (alpha.is_infinite()) {
        return rinf;
    }
    const double a = alpha.value();
    if (a == 2.0) {
        return r2;
    }
    return (a - 2.0) / (a - 1.0) * rinf + r2 / (a - 1.0);
}

bool is_majorized_by(const ProbabilityVector& q, const ProbabilityVector& p, double tol) {
    const std::size_t n = std::max(q.size(), p.size());
    std::vector<double> qs(q.begin(), q.end()), ps(p.begin(), p.end());
    qs.resize(n, 0.0);
    ps.resize(n, 0.0);
    std::sort(qs.begin(), qs.end(), std::greater<>());
    std::sort(ps.begin(), ps.end(), std::greater<>());
    double sq = 0.0, sp = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sq += qs[k];
        sp += ps[k];
        if (sq > sp + tol) {
            return false;
        }
    }
    return true;
}

} // namespace kdf
