#include "kdf/bounds.hpp"
#include "kdf/channels.hpp"
#include "kdf/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace kdf;

namespace {

/// The Renyi bound as displayed in closed form: for finite alpha,
///   [alpha ln n - 2 ln d - ln D] / (alpha - 1)
///     - (alpha - 2)/(alpha - 1) ln(1 + sqrt(n-1) sqrt(R)),
/// with D = (1-c)cS + ((1-c)^2 + cS^2) purity and R the ETF radicand.
double renyi_bound_closed_form(const EtfParameters& p, double purity, double alpha) {
    const double n = static_cast<double>(p.n), d = static_cast<double>(p.d);
    const double one_c = 1.0 - p.c;
    const double big_d = one_c * p.c * p.S + (one_c * one_c + p.c * p.S * p.S) * purity;
    const double radicand = (one_c * one_c / (p.S * p.S) + p.c) * n * purity + one_c * p.c * d - 1.0;
    const double tail = std::log(1.0 + std::sqrt(n - 1.0) * std::sqrt(std::max(radicand, 0.0)));
    if (std::isinf(alpha)) {
        return std::log(n) - tail;
    }
    return (alpha * std::log(n) - 2.0 * std::log(d) - std::log(big_d)) / (alpha - 1.0) -
           (alpha - 2.0) / (alpha - 1.0) * tail;
}

} // namespace

TEST_CASE("Interval") {
    const Interval iv = Interval::of(-1.0, 3.0);
    CHECK(iv.center() == 1.0);
    CHECK(iv.radius() == 2.0);
    CHECK(iv.contains(3.0));
    CHECK_FALSE(iv.contains(3.1));
    CHECK(iv.slack(0.0) == 1.0);
    CHECK(iv.slack(4.0) == -1.0);
    CHECK(iv.intersect(Interval::of(0.0, 10.0)).lower == 0.0);
    CHECK_THROWS_AS(Interval::of(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(iv.intersect(Interval::of(5.0, 6.0)), ValidationError);
}

TEST_CASE("BoundReport sign convention") {
    const BoundReport up = BoundReport::upper(1.0, 0.75);
    CHECK(up.slack == 0.25);
    CHECK(up.holds());
    CHECK_FALSE(up.saturated);
    const BoundReport low = BoundReport::lower(0.5, 0.5 + 1e-9);
    CHECK(low.slack > 0.0);
    CHECK(low.saturated);
    CHECK_FALSE(BoundReport::lower(0.5, 0.4).holds());
}

TEST_CASE("eigen_interval contains every eigenvalue") {
    Rng rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const HermitianMatrix m = test::random_hermitian(n, rng);
        const Interval iv = eigen_interval(m);
        for (double ev : hermitian_eig(m).eigenvalues) {
            CHECK(iv.slack(ev) >= -1e-10);
        }
    }
}

TEST_CASE("eigen_interval boundary iff the other n-1 eigenvalues coincide") {
    Rng rng(32);
    for (std::size_t n = 2; n <= 8; ++n) {
        std::vector<double> values(n, 0.3);
        values[0] = 2.0;
        const Interval hi = eigen_interval(test::hermitian_with_spectrum(values, rng));
        CHECK(std::abs(hi.upper - 2.0) <= 1e-10);
        values[0] = -1.0;
        const Interval lo = eigen_interval(test::hermitian_with_spectrum(values, rng));
        CHECK(std::abs(lo.lower + 1.0) <= 1e-10);
    }
    // Generic spectrum stays strictly inside.
    const Interval iv = eigen_interval(test::hermitian_with_spectrum({3.0, 1.0, 0.0}, rng));
    CHECK(iv.upper > 3.0 + 1e-3);
    CHECK(iv.lower < -1e-3);
    // Scalar matrix.
    const Interval one = eigen_interval(HermitianMatrix(ComplexMatrix{{2.5}}));
    CHECK(one.lower == 2.5);
    CHECK(one.upper == 2.5);
}

TEST_CASE("singular_interval") {
    Rng rng(33);
    const Interval u = singular_interval(haar_unitary(4, rng));
    CHECK(std::abs(u.lower - 1.0) <= 1e-7);
    CHECK(std::abs(u.upper - 1.0) <= 1e-7);
    const Interval d = singular_interval(ComplexMatrix::diagonal(std::vector<double>{2.0, 1.0, 1.0}));
    CHECK(std::abs(d.upper - 2.0) <= 1e-12);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix x = ginibre(2 + trial % 4, 2 + trial % 5, rng);
        const Interval iv = singular_interval(x);
        for (double s : singular_values(x)) {
            CHECK(iv.slack(s) >= -1e-10);
        }
    }
}

TEST_CASE("max_eig_upper_bound") {
    Rng rng(34);
    CHECK(max_eig_upper_bound(HermitianMatrix(ComplexMatrix::identity(5))) == doctest::Approx(1.0));
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<double> values(n, 0.1);
        values[0] = 0.9;
        CHECK(std::abs(max_eig_upper_bound(test::hermitian_with_spectrum(values, rng)) - 0.9) <= 1e-10);
    }
    CHECK_THROWS_AS(max_eig_upper_bound(test::hermitian_with_spectrum({1.0, -0.5}, rng)), ValidationError);
}

TEST_CASE("Gershgorin disks") {
    const auto disks = gershgorin_disks(ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0}));
    CHECK(disks[0].radius == 0.0);
    CHECK(disks[1].center == cplx{2.0, 0.0});
    CHECK_THROWS_AS(gershgorin_disks(ComplexMatrix(2, 3)), DimensionError);

    const auto pieces = gershgorin_real_union(
        {GershgorinDisk{1.0, 0.5}, GershgorinDisk{1.8, 0.4}, GershgorinDisk{5.0, 0.1}});
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].lower == 0.5);
    CHECK(pieces[0].upper == doctest::Approx(2.2));
    CHECK(pieces[1].lower == doctest::Approx(4.9));

    Rng rng(35);
    for (int trial = 0; trial < 300; ++trial) {
        const HermitianMatrix m = test::random_hermitian(2 + trial % 6, rng);
        const auto u = gershgorin_real_union(gershgorin_disks(m.matrix()));
        for (double ev : hermitian_eig(m).eigenvalues) {
            CHECK(std::any_of(u.begin(), u.end(), [&](const Interval& iv) { return iv.contains(ev, 1e-12); }));
        }
    }
}

TEST_CASE("qubit SIC worked example") {
    const Frame f = sic_qubit();
    const EtfParameters p = EtfParameters::of(f);
    const Unraveling a = principal_kraus(f);
    const LambdaMatrix lam = lambda_matrix(a, DensityMatrix::pure(f.ket(0)));
    const Interval iv = eigen_interval(lam.hermitian());
    CHECK(iv.center() == doctest::Approx(0.25));
    CHECK(iv.radius() == doctest::Approx(0.25 * std::sqrt(11.0 / 3.0)).epsilon(1e-13));
    CHECK(etf_eigen_interval(p, 1.0).radius() == doctest::Approx(0.25 * std::sqrt(11.0 / 3.0)).epsilon(1e-13));
    const double bound = max_eig_upper_bound(lam.hermitian());
    CHECK(bound == doctest::Approx((1.0 + std::sqrt(11.0 / 3.0)) / 4.0).epsilon(1e-13));
    CHECK(bound < 0.729);
    CHECK(bound >= 2.0 / 3.0);
    const double mm_bound = etf_spectral_bound(p, 0.5);
    CHECK(mm_bound == doctest::Approx(0.5));
    const LambdaMatrix lam_mm = lambda_matrix(a, DensityMatrix::maximally_mixed(2));
    CHECK(hermitian_eig(lam_mm.hermitian()).eigenvalues.front() == doctest::Approx(0.5));
    for (const auto& disk : gershgorin_disks(lam_mm.matrix())) {
        CHECK(disk.center.real() == doctest::Approx(0.25));
        CHECK(disk.radius == doctest::Approx(0.25));
    }
}

TEST_CASE("maximally mixed ETF interval equals the Gershgorin interval") {
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        const EtfParameters p = EtfParameters::of(f);
        const double n = static_cast<double>(p.n), d = static_cast<double>(p.d);
        const Interval etf = etf_eigen_interval(p, 1.0 / d);
        CHECK(std::abs(etf.radius() - (n - d) / (n * d)) <= 1e-12);
        CHECK(std::abs(etf_spectral_bound(p, 1.0 / d) - (1.0 / n + (n - d) / (n * d))) <= 1e-12);
        const LambdaMatrix lam = lambda_matrix(principal_kraus(f), DensityMatrix::maximally_mixed(f.dim()));
        for (const auto& disk : gershgorin_disks(lam.matrix())) {
            CHECK(std::abs(disk.radius - (n - d) / (n * d)) <= 1e-12);
        }
    }
}

TEST_CASE("ETF closed forms on an orthonormal basis (c = 0)") {
    const EtfParameters p = EtfParameters::of(3, 3);
    for (double purity : {1.0 / 3.0, 0.5, 1.0}) {
        CHECK(etf_eigen_interval(p, purity).radius() ==
              doctest::Approx(std::sqrt(2.0) / 3.0 * std::sqrt(std::max(3.0 * purity - 1.0, 0.0))));
        for (double alpha : {0.5, 1.0, 2.0}) {
            CHECK(tsallis_uncertainty_bound(p, purity, AlphaOrder(alpha)) ==
                  doctest::Approx(alpha_log(1.0 / purity, AlphaOrder(alpha))));
        }
    }
    CHECK(etf_eigen_interval(p, 1.0).upper == doctest::Approx(1.0));
}

TEST_CASE("purity is validated") {
    const EtfParameters p = EtfParameters::of(4, 2);
    CHECK_THROWS_AS(ic_upper_bound(p, 0.4), DomainError);
    CHECK_THROWS_AS(etf_eigen_interval(p, 1.1), DomainError);
    CHECK_NOTHROW(etf_eigen_interval(p, 0.5 - 1e-13));
    CHECK_THROWS_AS(lambda_hs_norm_sq(p, 0.0, 0.5), DomainError);
}

TEST_CASE("Renyi bound: interpolation form equals the closed form") {
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        const EtfParameters p = EtfParameters::of(f);
        for (double purity : {1.0 / p.d, 0.5 * (1.0 + 1.0 / p.d), 1.0}) {
            for (double alpha : {2.0, 2.5, 3.0, 7.0, 50.0, kInfinity}) {
                CHECK(std::abs(renyi_uncertainty_bound(p, purity, AlphaOrder(alpha)) -
                               renyi_bound_closed_form(p, purity, alpha)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("Renyi and Tsallis bound examples") {
    const EtfParameters p = EtfParameters::of(4, 2);
    CHECK(renyi_uncertainty_bound(p, 1.0, AlphaOrder(2.0)) == doctest::Approx(-std::log(5.0 / 9.0)).epsilon(1e-14));
    CHECK(renyi_uncertainty_bound(p, 1.0, AlphaOrder::infinity()) ==
          doctest::Approx(-std::log(etf_spectral_bound(p, 1.0))).epsilon(1e-14));
    CHECK(tsallis_uncertainty_bound(p, 1.0, AlphaOrder(2.0)) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
    const double arg = 4.0 / ((2.0 / 3.0) * (1.0 / 3.0) * 2.0 + (4.0 / 9.0 + 4.0 / 3.0));
    CHECK(tsallis_uncertainty_bound(p, 1.0, AlphaOrder(1.0)) == doctest::Approx(std::log(arg)));
    CHECK_THROWS_AS(renyi_uncertainty_bound(p, 1.0, AlphaOrder(1.5)), DomainError);
    CHECK_THROWS_AS(tsallis_uncertainty_bound(p, 1.0, AlphaOrder(2.5)), DomainError);
    CHECK_THROWS_AS(tsallis_uncertainty_bound(p, 1.0, AlphaOrder::infinity()), DomainError);
}

TEST_CASE("index of coincidence bound and norm identity") {
    Rng rng(36);
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        const EtfParameters p = EtfParameters::of(f);
        const Unraveling a = principal_kraus(f);
        for (int k = 0; k < 30; ++k) {
            const DensityMatrix rho = test::random_state(f.dim(), rng, k);
            const double pur = purity(rho);
            const LambdaMatrix lam = lambda_matrix(a, rho);
            const double ic = index_of_coincidence(ProbabilityVector(lam.diagonal()));
            CHECK(ic <= ic_upper_bound(p, pur) + 1e-10);
            const double hs = frobenius_norm(lam.matrix());
            CHECK(std::abs(hs * hs - lambda_hs_norm_sq(p, ic, pur)) <= 1e-10);
            CHECK(hs * hs <= lambda_hs_norm_sq_bound(p, pur) + 1e-10);
            CHECK(std::abs(pi_hs_norm(p, ic, pur) - frobenius_norm(kd_matrix(povm_from_frame(f), rho).matrix())) <=
                  1e-10);
        }
    }
}

TEST_CASE("ETF spectral bound is below one on pure frame states when n > d") {
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        if (f.size() > f.dim()) {
            CHECK(etf_spectral_bound(EtfParameters::of(f), 1.0) < 1.0);
        }
    }
}

TEST_CASE("pure_state_bound_margin") {
    CHECK(pure_state_bound_margin(4, 2) == 4.0);
    for (long d = 2; d <= 12; ++d) {
        CHECK(pure_state_bound_margin_scaled(d, d) == 0);
        for (long n = d + 1; n <= d * d; ++n) {
            CHECK(pure_state_bound_margin_scaled(n, d) > 0);
        }
    }
    CHECK_THROWS_AS(pure_state_bound_margin(3, 1), DomainError);
    CHECK_THROWS_AS(pure_state_bound_margin(2, 3), DomainError);
}
