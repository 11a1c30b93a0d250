#pragma once

#include "kdf/tolerances.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kdf {

/// Outcome distribution. Entries in [-tol_neg, 0) are clamped to zero; a sum
/// further than tol_sum from one is rejected rather than renormalized.
class ProbabilityVector {
public:
    ProbabilityVector() = default;
    explicit ProbabilityVector(std::vector<double> entries, double tol_neg = kStructuralTol,
                               double tol_sum = kNumericTol);

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const noexcept { return p_; }
    auto begin() const noexcept { return p_.begin(); }
    auto end() const noexcept { return p_.end(); }
    double max() const;

    static ProbabilityVector uniform(std::size_t n);
    static ProbabilityVector one_hot(std::size_t n, std::size_t k);

private:
    std::vector<double> p_;
};

} // namespace kdf
