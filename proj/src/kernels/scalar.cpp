#include "backends.hpp"

namespace kdf::kernels {
namespace {

// Plain loops over the real/imaginary parts. Written out instead of using
// std::complex operator* so the compiler does not emit the Annex G
// NaN-recovery branches (inputs are always finite here).

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr)};
    }
}

double norm_sq_scalar(const cplx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

} // namespace

namespace detail {
const KernelTable scalar_table{Backend::scalar, &dotc_scalar, &axpy_scalar, &norm_sq_scalar};
} // namespace detail

} // namespace kdf::kernels
