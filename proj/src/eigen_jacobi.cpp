// Jacobi-type factorizations: cyclic two-sided Jacobi for Hermitian
// eigenproblems and one-sided (Hestenes) Jacobi for singular values.

#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"
#include "kdf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kdf {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Unitary 2x2 G with G^dagger [[a, b], [conj(b), d]] G diagonal (a, d real).
/// Stored as the four entries of the (p, q) block.
struct Rotation {
    cplx pp, pq, qp, qq;
};

Rotation jacobi_rotation(double a, double d, cplx b) {
    const double mod = std::abs(b);
    const cplx phase_conj = std::conj(b) / mod; // e^{-i arg b}
    const double tau = (d - a) / (2.0 * mod);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    return {c, s, -s * phase_conj, c * phase_conj};
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
    double top = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        top = std::max(top, std::abs(v(i, col)));
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double m = std::abs(v(i, col));
        if (m >= top * (1.0 - 1e-10)) {
            const cplx w = std::conj(v(i, col)) / m;
            for (std::size_t k = 0; k < v.rows(); ++k) {
                v(k, col) *= w;
            }
            v(i, col) = m;
            return;
        }
    }
}

} // namespace

Spectrum hermitian_eig(const HermitianMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(a);
    const double stop = static_cast<double>(n) * kEps * scale;

    for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= kEps * kEps * scale) {
                    continue;
                }
                const Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(k, p), y = a(k, q);
                    a(k, p) = x * g.pp + y * g.qp;
                    a(k, q) = x * g.pq + y * g.qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(p, k), y = a(q, k);
                    a(p, k) = std::conj(g.pp) * x + std::conj(g.qp) * y;
                    a(q, k) = std::conj(g.pq) * x + std::conj(g.qq) * y;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = v(k, p), y = v(k, q);
                    v(k, p) = x * g.pp + y * g.qp;
                    v(k, q) = x * g.pq + y * g.qq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
        fix_phase(out.eigenvectors, k);
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
    if (x.empty()) {
        return {};
    }
    // Orthogonalize the columns of a tall matrix; for a wide one use x^dagger.
    const bool wide = x.rows() < x.cols();
    const std::size_t len = wide ? x.cols() : x.rows();
    const std::size_t count = wide ? x.rows() : x.cols();

    std::vector<std::vector<cplx>> cols(count, std::vector<cplx>(len));
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (wide) {
                cols[i][j] = std::conj(x(i, j));
            } else {
                cols[j][i] = x(i, j);
            }
        }
    }

    std::vector<cplx> tmp_i(len), tmp_j(len);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                const double alpha = kernels::norm_sq(cols[i].data(), len);
                const double beta = kernels::norm_sq(cols[j].data(), len);
                const cplx gamma = kernels::dotc(cols[i].data(), cols[j].data(), len);
                if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) {
                    continue;
                }
                rotated = true;
                const Rotation g = jacobi_rotation(alpha, beta, gamma);
                std::fill(tmp_i.begin(), tmp_i.end(), cplx{0.0, 0.0});
                std::fill(tmp_j.begin(), tmp_j.end(), cplx{0.0, 0.0});
                kernels::axpy(g.pp, cols[i].data(), tmp_i.data(), len);
                kernels::axpy(g.qp, cols[j].data(), tmp_i.data(), len);
                kernels::axpy(g.pq, cols[i].data(), tmp_j.data(), len);
                kernels::axpy(g.qq, cols[j].data(), tmp_j.data(), len);
                cols[i].swap(tmp_i);
                cols[j].swap(tmp_j);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> sv(count);
    for (std::size_t k = 0; k < count; ++k) {
        sv[k] = std::sqrt(kernels::norm_sq(cols[k].data(), len));
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

} // namespace kdf
