#pragma once

// Inner-loop kernels over interleaved complex<double> arrays.
//
// Each backend provides the same three primitives. The scalar backend is the
// reference; vector backends must agree with it to rounding (see
// tests/test_kernels.cpp). The active backend is chosen once at first use from
// the CPU feature set and can be overridden with KDF_KERNELS=scalar|avx2|neon
// or set_backend().

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace kdf::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2, neon };

struct KernelTable {
    Backend backend;
    /// sum_i conj(x[i]) * y[i]
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    /// y[i] += alpha * x[i]
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    /// sum_i |x[i]|^2
    double (*norm_sq)(const cplx* x, std::size_t n);
};

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// Backends compiled in and supported by this CPU. Scalar is always first.
std::vector<Backend> available_backends();

/// Table for a specific backend; throws kdf::DomainError if unavailable.
const KernelTable& table(Backend b);

/// Currently selected table.
const KernelTable& active();

/// Override the selection (e.g. for equivalence tests). Throws if unavailable.
void set_backend(Backend b);

// Entry points used by the linear-algebra layer.
inline cplx dotc(const cplx* x, const cplx* y, std::size_t n) { return active().dotc(x, y, n); }
inline void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { active().axpy(alpha, x, y, n); }
inline double norm_sq(const cplx* x, std::size_t n) { return active().norm_sq(x, n); }

} // namespace kdf::kernels
