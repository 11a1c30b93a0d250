// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include "backends.hpp"

#include <immintrin.h>

namespace kdf::kernels {
namespace {

// One __m256d holds two complex<double> as [re0, im0, re1, im1].

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    // same = [xr*yr, xi*yi, ...], cross = [xr*yi, xi*yr, ...]
    __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
    __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
        const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
        const __m256d xb = _mm256_loadu_pd(xp + 2 * i + 4);
        const __m256d yb = _mm256_loadu_pd(yp + 2 * i + 4);
        same0 = _mm256_fmadd_pd(xa, ya, same0);
        same1 = _mm256_fmadd_pd(xb, yb, same1);
        cross0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), cross0);
        cross1 = _mm256_fmadd_pd(xb, _mm256_permute_pd(yb, 0b0101), cross1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
        const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
        same0 = _mm256_fmadd_pd(xa, ya, same0);
        cross0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), cross0);
    }
    const __m256d same = _mm256_add_pd(same0, same1);
    const __m256d cross = _mm256_add_pd(cross0, cross1);
    // im = sum(xr*yi) - sum(xi*yr): flip the sign of the odd lanes.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(same);
    double im = hsum(_mm256_mul_pd(cross, sign));
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        // [ai*xi, ai*xr]
        const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
        // [ar*xr - ai*xi, ar*xi + ai*xr]
        const __m256d prod = _mm256_fmaddsub_pd(ar, xv, t);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + (alpha.real() * xr - alpha.imag() * xi),
                y[i].imag() + (alpha.real() * xi + alpha.imag() * xr)};
    }
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256d a = _mm256_loadu_pd(xp + i);
        const __m256d b = _mm256_loadu_pd(xp + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 4 <= len; i += 4) {
        const __m256d a = _mm256_loadu_pd(xp + i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) {
        acc += xp[i] * xp[i];
    }
    return acc;
}

} // namespace

namespace detail {
const KernelTable avx2_table{Backend::avx2, &dotc_avx2, &axpy_avx2, &norm_sq_avx2};
} // namespace detail

} // namespace kdf::kernels
