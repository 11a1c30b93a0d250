#pragma once

// Kraus unravelings of a channel, the Gram-type matrix
//   Lambda(A; rho)_ij = tr(A_i^dagger A_j rho)
// whose diagonal is the outcome distribution, the Kirkwood-Dirac matrix
//   Pi(E; rho)_ij = tr(E_i E_j rho),
// and the extremal unraveling that diagonalizes Lambda.

#include "kdf/frames.hpp"
#include "kdf/linalg.hpp"
#include "kdf/probability.hpp"

#include <vector>

namespace kdf {

/// Ordered Kraus operators A_j (all d_out x d_in) with sum A_j^dagger A_j = I.
class Unraveling {
public:
    explicit Unraveling(std::vector<ComplexMatrix> kraus, double tol = kNumericTol);

    std::size_t size() const noexcept { return kraus_.size(); }
    std::size_t input_dim() const noexcept { return kraus_.front().cols(); }
    std::size_t output_dim() const noexcept { return kraus_.front().rows(); }
    const ComplexMatrix& operator[](std::size_t j) const { return kraus_[j]; }
    const std::vector<ComplexMatrix>& operators() const noexcept { return kraus_; }

    /// Largest entrywise deviation of sum A_j^dagger A_j from the identity.
    double completeness_defect() const;
    /// Copy with zero operators appended up to `m` operators.
    Unraveling padded(std::size_t m) const;

private:
    std::vector<ComplexMatrix> kraus_;
};

class LambdaMatrix {
public:
    /// Checks PSD (min eigenvalue >= -tol) and unit trace within tol.
    explicit LambdaMatrix(HermitianMatrix m, double tol = kNumericTol);

    std::size_t size() const noexcept { return m_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return m_; }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    std::vector<double> diagonal() const;

private:
    HermitianMatrix m_;
};

class KdMatrix {
public:
    /// Checks that all entries sum to one within tol.
    explicit KdMatrix(HermitianMatrix m, double tol = kNumericTol);

    std::size_t size() const noexcept { return m_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return m_; }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    HermitianMatrix m_;
};

struct ExtremalUnraveling {
    Unraveling unraveling;
    ProbabilityVector probabilities; // eigenvalues of Lambda, non-increasing
    ComplexMatrix rotation;          // V with V^dagger Lambda V diagonal
};

/// sum_j A_j rho A_j^dagger
DensityMatrix apply_channel(const Unraveling& u, const DensityMatrix& rho);

/// A_j = sqrt(d/n) |phi_j><phi_j|; throws ValidationError for a non-tight frame.
Unraveling principal_kraus(const Frame& f, double tol = kNumericTol);

/// A_j = sqrt(E_j) for an arbitrary POVM.
Unraveling principal_kraus(const Povm& p);

/// B_i = sum_j A_j v_ji. `v` must be unitary of size m' >= u.size(); u is
/// zero-padded to m' operators first.
Unraveling transform_unraveling(const Unraveling& u, const ComplexMatrix& v, double tol = kNumericTol);

LambdaMatrix lambda_matrix(const Unraveling& u, const DensityMatrix& rho, double tol = kNumericTol);

KdMatrix kd_matrix(const Povm& p, const DensityMatrix& rho, double tol = kNumericTol);

/// Eigenvalues of Lambda with |lambda| <= kStructuralTol set to zero.
ExtremalUnraveling extremal_unraveling(const Unraveling& u, const DensityMatrix& rho);

/// p_j = tr(A_j^dagger A_j rho)
ProbabilityVector unraveling_probabilities(const Unraveling& u, const DensityMatrix& rho);

/// Doubly stochastic matrix |w_ij|^2 of a unitary.
std::vector<std::vector<double>> unistochastic(const ComplexMatrix& w);

} // namespace kdf
