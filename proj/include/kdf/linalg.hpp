#pragma once

// Dense complex matrices and the handful of factorizations the rest of the
// library needs. Sizes are small (n in the tens), so everything is row-major
// std::vector storage with the inner loops routed through kdf::kernels.

#include "kdf/tolerances.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace kdf {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws DimensionError on a size mismatch and
    /// ValidationError on a non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    /// Nested rows, for literals in tests and examples.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const cplx> values);
    /// |x><y|
    static ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);
    /// Column vector from a ket.
    static ComplexMatrix column(std::span<const cplx> x);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<cplx> col(std::size_t j) const;

    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> data() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// a^dagger * b without forming the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square matrix equal to its adjoint. Construction checks
/// |m_ij - conj(m_ji)| <= tol and |Im m_ii| <= tol, then stores the exactly
/// Hermitian part (m + m^dagger)/2.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix& m, double tol = kStructuralTol);

    std::size_t dim() const noexcept { return m_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    double trace() const { return m_.trace().real(); }

    operator const ComplexMatrix&() const noexcept { return m_; }

private:
    ComplexMatrix m_;
};

struct Spectrum {
    std::vector<double> eigenvalues; // non-increasing
    ComplexMatrix eigenvectors;      // column k belongs to eigenvalues[k]
};

/// tr(x^dagger y)
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// Frobenius norm, the q = 2 case of schatten_norm computed without an SVD.
double frobenius_norm(const ComplexMatrix& x);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Schatten q-norm for q in [1, inf]; q = kInfinity gives the spectral norm.
double schatten_norm(const ComplexMatrix& x, double q);

/// Cyclic Jacobi eigensolver. Eigenvalues sorted non-increasing; each
/// eigenvector's first component of largest modulus is made real positive.
Spectrum hermitian_eig(const HermitianMatrix& m);

/// Singular values, non-increasing, min(rows, cols) of them (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix& x);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const HermitianMatrix& m);

/// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero; anything more negative throws ValidationError.
HermitianMatrix sqrt_psd(const HermitianMatrix& m, double tol = kStructuralTol);

/// V * diag(values) * V^dagger
ComplexMatrix reconstruct(const Spectrum& s);

/// Frobenius norm of u^dagger u - I.
double unitarity_defect(const ComplexMatrix& u);

// ---------------------------------------------------------------------------
// Random sampling. The generator is always passed in explicitly.
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

/// Independent stream for sample `index` of a run seeded with `seed`.
/// Stable across runs and thread schedules.
Rng derive_rng(std::uint64_t seed, std::uint64_t index);

/// Matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed n x n unitary: Ginibre matrix, Gram-Schmidt QR with the
/// triangular factor's diagonal real positive.
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

} // namespace kdf
