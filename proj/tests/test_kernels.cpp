#include "kdf/channels.hpp"
#include "kdf/errors.hpp"
#include "kdf/kernels.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kdf;

namespace {

std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& z : v) {
        z = {g(rng), g(rng)};
    }
    return v;
}

double magnitude(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::abs(x[i]) * std::abs(y[i]);
    }
    return std::max(s, 1.0);
}

/// Restores the default backend when a test forces one.
struct BackendGuard {
    kernels::Backend saved = kernels::active().backend;
    ~BackendGuard() { kernels::set_backend(saved); }
};

} // namespace

TEST_CASE("scalar backend is always available and listed first") {
    const auto backends = kernels::available_backends();
    REQUIRE_FALSE(backends.empty());
    CHECK(backends.front() == kernels::Backend::scalar);
    CHECK(kernels::table(kernels::Backend::scalar).backend == kernels::Backend::scalar);
}

TEST_CASE("backend names round-trip") {
    for (auto b : {kernels::Backend::scalar, kernels::Backend::avx2, kernels::Backend::neon}) {
        const auto parsed = kernels::parse_backend(kernels::to_string(b));
        REQUIRE(parsed);
        CHECK(*parsed == b);
    }
    CHECK_FALSE(kernels::parse_backend("sse9"));
}

TEST_CASE("unavailable backends are rejected") {
    const auto backends = kernels::available_backends();
    for (auto b : {kernels::Backend::avx2, kernels::Backend::neon}) {
        if (std::find(backends.begin(), backends.end(), b) == backends.end()) {
            CHECK_THROWS_AS(kernels::table(b), DomainError);
            CHECK_THROWS_AS(kernels::set_backend(b), DomainError);
        }
    }
}

TEST_CASE("every backend matches the scalar reference on all lengths and alignments") {
    Rng rng(20240611);
    const auto& ref = kernels::table(kernels::Backend::scalar);
    for (auto b : kernels::available_backends()) {
        const auto& k = kernels::table(b);
        CAPTURE(kernels::to_string(b));
        for (std::size_t n = 0; n <= 67; ++n) {
            for (std::size_t offset = 0; offset < 2; ++offset) {
                // Offset by one element to exercise unaligned loads.
                auto xs = random_vector(n + offset, rng);
                auto ys = random_vector(n + offset, rng);
                const cplx* x = xs.data() + offset;
                const cplx* y = ys.data() + offset;
                std::vector<cplx> xv(x, x + n), yv(y, y + n);
                const double scale = magnitude(xv, yv);

                const cplx d_ref = ref.dotc(x, y, n);
                const cplx d_k = k.dotc(x, y, n);
                CHECK(std::abs(d_ref - d_k) <= 1e-14 * scale);

                CHECK(std::abs(ref.norm_sq(x, n) - k.norm_sq(x, n)) <= 1e-14 * std::max(1.0, ref.norm_sq(x, n)));

                const cplx alpha{0.37, -1.21};
                std::vector<cplx> y_ref = yv, y_k = yv;
                ref.axpy(alpha, x, y_ref.data(), n);
                k.axpy(alpha, x, y_k.data(), n);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::abs(y_ref[i] - y_k[i]) <= 1e-14 * (std::abs(alpha * x[i]) + std::abs(y[i]) + 1.0));
                }
            }
        }
    }
}

TEST_CASE("dotc conjugates its first argument") {
    const std::vector<cplx> x = {{0.0, 1.0}};
    const std::vector<cplx> y = {{1.0, 0.0}};
    for (auto b : kernels::available_backends()) {
        CHECK(kernels::table(b).dotc(x.data(), y.data(), 1) == cplx{0.0, -1.0});
    }
}

TEST_CASE("Lambda is backend independent") {
    BackendGuard guard;
    Rng rng(7);
    const Frame f = test::sic_qutrit();
    const DensityMatrix rho = random_density_matrix(3, rng);
    kernels::set_backend(kernels::Backend::scalar);
    const ComplexMatrix ref = lambda_matrix(principal_kraus(f), rho).matrix();
    for (auto b : kernels::available_backends()) {
        kernels::set_backend(b);
        CAPTURE(kernels::to_string(b));
        CHECK(max_abs_diff(lambda_matrix(principal_kraus(f), rho).matrix(), ref) <= 1e-15);
        CHECK(kernels::active().backend == b);
    }
}
