#include "kdf/channels.hpp"

#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kdf {

// ---------------------------------------------------------------------------
// Unraveling
// ---------------------------------------------------------------------------

Unraveling::Unraveling(std::vector<ComplexMatrix> kraus, double tol) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw ValidationError("Unraveling: no Kraus operators");
    }
    const std::size_t rows = kraus_.front().rows();
    const std::size_t cols = kraus_.front().cols();
    for (std::size_t j = 0; j < kraus_.size(); ++j) {
        if (kraus_[j].rows() != rows || kraus_[j].cols() != cols) {
            throw DimensionError("Unraveling: Kraus operator " + std::to_string(j) + " has a different shape");
        }
    }
    const double defect = completeness_defect();
    if (defect > tol) {
        throw ValidationError("Unraveling: sum A^dagger A differs from I by " + std::to_string(defect));
    }
}

double Unraveling::completeness_defect() const {
    ComplexMatrix total(input_dim(), input_dim());
    for (const auto& a : kraus_) {
        total += adjoint_times(a, a);
    }
    return max_abs_diff(total, ComplexMatrix::identity(input_dim()));
}

Unraveling Unraveling::padded(std::size_t m) const {
    if (m < kraus_.size()) {
        throw DimensionError("Unraveling::padded: cannot shrink " + std::to_string(kraus_.size()) + " operators to " +
                             std::to_string(m));
    }
    std::vector<ComplexMatrix> ops = kraus_;
    ops.resize(m, ComplexMatrix(output_dim(), input_dim()));
    return Unraveling(std::move(ops), kNumericTol);
}

// ---------------------------------------------------------------------------
// Lambda / Pi
// ---------------------------------------------------------------------------

LambdaMatrix::LambdaMatrix(HermitianMatrix m, double tol) : m_(std::move(m)) {
    const double tr = m_.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw ValidationError("LambdaMatrix: trace is " + std::to_string(tr));
    }
    const double low = min_eigenvalue(m_);
    if (low < -tol) {
        throw ValidationError("LambdaMatrix: eigenvalue " + std::to_string(low) + " is negative");
    }
}

std::vector<double> LambdaMatrix::diagonal() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = m_(i, i).real();
    }
    return out;
}

KdMatrix::KdMatrix(HermitianMatrix m, double tol) : m_(std::move(m)) {
    cplx total{0.0, 0.0};
    for (const auto& z : m_.matrix().data()) {
        total += z;
    }
    if (std::abs(total - cplx{1.0, 0.0}) > tol) {
        throw ValidationError("KdMatrix: entries sum to " + std::to_string(total.real()) + " + " +
                              std::to_string(total.imag()) + "i");
    }
}

namespace {

void require_input_dim(const Unraveling& u, const DensityMatrix& rho, const char* what) {
    if (u.input_dim() != rho.dim()) {
        throw DimensionError(std::string(what) + ": unraveling acts on C^" + std::to_string(u.input_dim()) +
                             ", state is on C^" + std::to_string(rho.dim()));
    }
}

/// M_ij = tr(X_i^dagger X_j rho) = <X_i, X_j rho>_hs.
ComplexMatrix trace_gram(const std::vector<ComplexMatrix>& ops, const ComplexMatrix& rho) {
    const std::size_t m = ops.size();
    std::vector<ComplexMatrix> right;
    right.reserve(m);
    for (const auto& x : ops) {
        right.push_back(x * rho);
    }
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            out(i, j) = hs_inner(ops[i], right[j]);
            if (j != i) {
                out(j, i) = hs_inner(ops[j], right[i]);
            }
        }
    }
    return out;
}

} // namespace

DensityMatrix apply_channel(const Unraveling& u, const DensityMatrix& rho) {
    require_input_dim(u, rho, "apply_channel");
    ComplexMatrix out(u.output_dim(), u.output_dim());
    for (const auto& a : u.operators()) {
        out += (a * rho.matrix()) * a.adjoint();
    }
    return DensityMatrix(out, kNumericTol);
}

Unraveling principal_kraus(const Frame& f, double tol) {
    const double defect = tightness_defect(f);
    if (defect > tol) {
        throw ValidationError("principal_kraus: frame is not tight (relative defect " + std::to_string(defect) + ")");
    }
    const cplx scale{std::sqrt(static_cast<double>(f.dim()) / static_cast<double>(f.size())), 0.0};
    std::vector<ComplexMatrix> ops;
    ops.reserve(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        ops.push_back(f.projector(j) * scale);
    }
    return Unraveling(std::move(ops), tol);
}

Unraveling principal_kraus(const Povm& p) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(p.size());
    for (const auto& e : p.elements()) {
        ops.push_back(sqrt_psd(e).matrix());
    }
    return Unraveling(std::move(ops));
}

Unraveling transform_unraveling(const Unraveling& u, const ComplexMatrix& v, double tol) {
    if (!v.is_square()) {
        throw DimensionError("transform_unraveling: mixing matrix must be square");
    }
    const std::size_t m = v.rows();
    if (m < u.size()) {
        throw DimensionError("transform_unraveling: mixing matrix of size " + std::to_string(m) + " for " +
                             std::to_string(u.size()) + " operators");
    }
    const double defect = unitarity_defect(v);
    if (defect > tol) {
        throw ValidationError("transform_unraveling: mixing matrix is not unitary (defect " + std::to_string(defect) +
                              ")");
    }
    const std::size_t len = u.output_dim() * u.input_dim();
    std::vector<ComplexMatrix> out(m, ComplexMatrix(u.output_dim(), u.input_dim()));
    for (std::size_t i = 0; i < m; ++i) {
        cplx* bi = out[i].data().data();
        // Padded operators are zero, so only the first u.size() terms contribute.
        for (std::size_t j = 0; j < u.size(); ++j) {
            kernels::axpy(v(j, i), u[j].data().data(), bi, len);
        }
    }
    return Unraveling(std::move(out), tol);
}

LambdaMatrix lambda_matrix(const Unraveling& u, const DensityMatrix& rho, double tol) {
    require_input_dim(u, rho, "lambda_matrix");
    return LambdaMatrix(HermitianMatrix(trace_gram(u.operators(), rho.matrix()), tol), tol);
}

KdMatrix kd_matrix(const Povm& p, const DensityMatrix& rho, double tol) {
    if (p.dim() != rho.dim()) {
        throw DimensionError("kd_matrix: POVM on C^" + std::to_string(p.dim()) + ", state on C^" +
                             std::to_string(rho.dim()));
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(p.size());
    for (const auto& e : p.elements()) {
        ops.push_back(e.matrix());
    }
    // E_i is Hermitian, so tr(E_i E_j rho) = <E_i, E_j rho>_hs.
    return KdMatrix(HermitianMatrix(trace_gram(ops, rho.matrix()), tol), tol);
}

ExtremalUnraveling extremal_unraveling(const Unraveling& u, const DensityMatrix& rho) {
    const LambdaMatrix lam = lambda_matrix(u, rho);
    const Spectrum spec = hermitian_eig(lam.hermitian());
    std::vector<double> probs = spec.eigenvalues;
    for (double& p : probs) {
        if (std::abs(p) <= kStructuralTol) {
            p = 0.0;
        }
    }
    Unraveling rotated = transform_unraveling(u, spec.eigenvectors);
    return {std::move(rotated), ProbabilityVector(std::move(probs)), spec.eigenvectors};
}

ProbabilityVector unraveling_probabilities(const Unraveling& u, const DensityMatrix& rho) {
    require_input_dim(u, rho, "unraveling_probabilities");
    std::vector<double> probs(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        probs[j] = hs_inner(u[j], u[j] * rho.matrix()).real();
    }
    return ProbabilityVector(std::move(probs));
}

std::vector<std::vector<double>> unistochastic(const ComplexMatrix& w) {
    std::vector<std::vector<double>> out(w.rows(), std::vector<double>(w.cols()));
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
            out[i][j] = std::norm(w(i, j));
        }
    }
    return out;
}

} // namespace kdf
