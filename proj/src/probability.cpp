#include "kdf/probability.hpp"

#include "kdf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kdf {

ProbabilityVector::ProbabilityVector(std::vector<double> entries, double tol_neg, double tol_sum)
    : p_(std::move(entries)) {
    if (p_.empty()) {
        throw ValidationError("ProbabilityVector: empty");
    }
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (!std::isfinite(p_[i]) || p_[i] < -tol_neg) {
            throw ValidationError("ProbabilityVector: entry " + std::to_string(i) + " = " + std::to_string(p_[i]) +
                                  " is not a probability");
        }
        p_[i] = std::max(p_[i], 0.0);
    }
    const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
    if (std::abs(total - 1.0) > tol_sum) {
        throw ValidationError("ProbabilityVector: entries sum to " + std::to_string(total));
    }
}

double ProbabilityVector::max() const { return *std::max_element(p_.begin(), p_.end()); }

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::one_hot(std::size_t n, std::size_t k) {
    std::vector<double> p(n, 0.0);
    p.at(k) = 1.0;
    return ProbabilityVector(std::move(p));
}

} // namespace kdf
