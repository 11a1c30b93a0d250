// AArch64 Advanced SIMD backend. One float64x2_t holds one complex<double>.

#include "backends.hpp"

#include <arm_neon.h>

namespace kdf::kernels {
namespace {

cplx dotc_neon(const cplx* x, const cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    float64x2_t same = vdupq_n_f64(0.0);  // [xr*yr, xi*yi]
    float64x2_t cross = vdupq_n_f64(0.0); // [xr*yi, xi*yr]
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xp + 2 * i);
        const float64x2_t yv = vld1q_f64(yp + 2 * i);
        same = vfmaq_f64(same, xv, yv);
        cross = vfmaq_f64(cross, xv, vextq_f64(yv, yv, 1));
    }
    return {vgetq_lane_f64(same, 0) + vgetq_lane_f64(same, 1),
            vgetq_lane_f64(cross, 0) - vgetq_lane_f64(cross, 1)};
}

void axpy_neon(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const float64x2_t ar = vdupq_n_f64(alpha.real());
    const float64x2_t ai = {-alpha.imag(), alpha.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xp + 2 * i);
        float64x2_t yv = vld1q_f64(yp + 2 * i);
        yv = vfmaq_f64(yv, ar, xv);                      // + [ar*xr, ar*xi]
        yv = vfmaq_f64(yv, ai, vextq_f64(xv, xv, 1));    // + [-ai*xi, ai*xr]
        vst1q_f64(yp + 2 * i, yv);
    }
}

double norm_sq_neon(const cplx* x, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(xp + 2 * i);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

} // namespace

namespace detail {
const KernelTable neon_table{Backend::neon, &dotc_neon, &axpy_neon, &norm_sq_neon};
} // namespace detail

} // namespace kdf::kernels
