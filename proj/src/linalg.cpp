#include "kdf/linalg.hpp"

#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kdf {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                             std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    if (!all_finite()) {
        throw ValidationError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
    if (!all_finite()) {
        throw ValidationError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> x, std::span<const cplx> y) {
    ComplexMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            m(i, j) = x[i] * std::conj(y[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> x) {
    return ComplexMatrix(x.size(), 1, std::vector<cplx>(x.begin(), x.end()));
}

std::vector<cplx> ComplexMatrix::col(std::size_t j) const {
    std::vector<cplx> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    kernels::axpy(1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    kernels::axpy(-1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& z : data_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* ci = c.row(i).data();
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const cplx aip = a(i, p);
            if (aip != cplx{0.0, 0.0}) {
                kernels::axpy(aip, b.row(p).data(), ci, b.cols());
            }
        }
    }
    return c;
}

ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("adjoint product: row counts " + std::to_string(a.rows()) + " and " +
                             std::to_string(b.rows()));
    }
    ComplexMatrix c(a.cols(), b.cols());
    for (std::size_t p = 0; p < a.rows(); ++p) {
        const cplx* bp = b.row(p).data();
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const cplx w = std::conj(a(p, i));
            if (w != cplx{0.0, 0.0}) {
                kernels::axpy(w, bp, c.row(i).data(), b.cols());
            }
        }
    }
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// HermitianMatrix
// ---------------------------------------------------------------------------

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw DimensionError("HermitianMatrix: expected a non-empty square matrix, got " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    }
    if (!m.all_finite()) {
        throw ValidationError("HermitianMatrix: non-finite entry");
    }
    const std::size_t n = m.rows();
    m_ = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(m(i, i).imag()) > tol) {
            throw ValidationError("HermitianMatrix: diagonal entry " + std::to_string(i) + " is not real");
        }
        m_(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                throw ValidationError("HermitianMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                      ") are not conjugate");
            }
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
    }
}

// ---------------------------------------------------------------------------
// norms
// ---------------------------------------------------------------------------

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_shape(x, y, "hs_inner");
    return kernels::dotc(x.data().data(), y.data().data(), x.size());
}

double frobenius_norm(const ComplexMatrix& x) { return std::sqrt(kernels::norm_sq(x.data().data(), x.size())); }

double schatten_norm(const ComplexMatrix& x, double q) {
    if (!(q >= 1.0)) {
        throw DomainError("schatten_norm: q must be >= 1, got " + std::to_string(q));
    }
    if (q == 2.0) {
        return frobenius_norm(x);
    }
    const std::vector<double> sv = singular_values(x);
    if (sv.empty()) {
        return 0.0;
    }
    if (std::isinf(q)) {
        return sv.front();
    }
    if (q == 1.0) {
        return std::accumulate(sv.begin(), sv.end(), 0.0);
    }
    // Scale by the largest value so sigma^q cannot overflow or underflow.
    const double top = sv.front();
    if (top == 0.0) {
        return 0.0;
    }
    double acc = 0.0;
    for (double s : sv) {
        acc += std::pow(s / top, q);
    }
    return top * std::pow(acc, 1.0 / q);
}

double min_eigenvalue(const HermitianMatrix& m) { return hermitian_eig(m).eigenvalues.back(); }

ComplexMatrix reconstruct(const Spectrum& s) {
    const std::size_t n = s.eigenvalues.size();
    ComplexMatrix scaled = s.eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            scaled(i, k) *= s.eigenvalues[k];
        }
    }
    return scaled * s.eigenvectors.adjoint();
}

HermitianMatrix sqrt_psd(const HermitianMatrix& m, double tol) {
    Spectrum s = hermitian_eig(m);
    // Eigenvalues at the solver's roundoff level are zero; taking their root
    // would turn 1e-17 noise into 3e-9 entries.
    const double top = s.eigenvalues.empty() ? 0.0 : std::abs(s.eigenvalues.front());
    const double noise = 4.0 * static_cast<double>(m.dim()) * std::numeric_limits<double>::epsilon() * top;
    for (double& v : s.eigenvalues) {
        if (v < -tol) {
            throw ValidationError("sqrt_psd: eigenvalue " + std::to_string(v) + " is negative");
        }
        v = v <= noise ? 0.0 : std::sqrt(v);
    }
    return HermitianMatrix(reconstruct(s), 1e-10);
}

double unitarity_defect(const ComplexMatrix& u) {
    if (!u.is_square()) {
        throw DimensionError("unitarity_defect: non-square matrix");
    }
    return frobenius_norm(adjoint_times(u, u) - ComplexMatrix::identity(u.rows()));
}

} // namespace kdf
