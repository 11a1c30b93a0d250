#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"
#include "kdf/linalg.hpp"

#include <cmath>

namespace kdf {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state ^= index * 0xd1b54a32d192ed03ULL;
    const std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return Rng(seq);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix z(rows, cols);
    for (auto& e : z.data()) {
        const double re = normal(rng);
        const double im = normal(rng);
        e = {re, im};
    }
    return z;
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
    if (n == 0) {
        throw DomainError("haar_unitary: n must be positive");
    }
    // Work on rows of Z^T so each Gram-Schmidt vector is contiguous; the
    // result is transposed back at the end. Rows of q are the columns of Q.
    ComplexMatrix q = ginibre(n, n, rng).transpose();
    for (std::size_t k = 0; k < n; ++k) {
        cplx* qk = q.row(k).data();
        // Two passes of modified Gram-Schmidt keep orthogonality at rounding level.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                const cplx* qj = q.row(j).data();
                const cplx r = kernels::dotc(qj, qk, n);
                kernels::axpy(-r, qj, qk, n);
            }
        }
        // Dividing by the (positive) norm leaves R with a real positive diagonal,
        // which is the phase convention that makes the distribution Haar.
        const double norm = std::sqrt(kernels::norm_sq(qk, n));
        for (std::size_t i = 0; i < n; ++i) {
            qk[i] /= norm;
        }
    }
    return q.transpose();
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng = derive_rng(seed, 0);
    return haar_unitary(n, rng);
}

} // namespace kdf
