#include "kdf/errors.hpp"
#include "kdf/frames.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace kdf;

TEST_CASE("coherence constant") {
    CHECK(coherence_constant(4, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(coherence_constant(9, 3) == doctest::Approx(0.25));
    CHECK(coherence_constant(3, 3) == 0.0);
    CHECK_THROWS_AS(coherence_constant(2, 3), DomainError);
    CHECK_THROWS_AS(coherence_constant(1, 0), DomainError);
    const EtfParameters p = EtfParameters::of(4, 2);
    CHECK(p.S == 2.0);
    CHECK(p.c == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("Frame validation") {
    CHECK_THROWS_AS(Frame(2, {{1.0, 0.0}}), ValidationError);         // n < d
    CHECK_THROWS_AS(Frame(2, {{1.0, 0.1}, {0.0, 1.0}}), ValidationError); // not unit
    CHECK_THROWS_AS(Frame(2, {{1.0}, {0.0, 1.0}}), DimensionError);
    const Frame f(2, {{1.0, 0.0}, {0.0, 1.0}});
    CHECK(f.size() == 2);
    CHECK(f.dim() == 2);
    CHECK(f.gram()(0, 1) == cplx{0.0, 0.0});
}

TEST_CASE("qubit SIC is a tight ETF with c = 1/3") {
    const Frame f = sic_qubit();
    CHECK(f.size() == 4);
    CHECK(is_tight(f));
    CHECK(tightness_defect(f) <= 1e-14);
    const auto c = is_equiangular(f);
    REQUIRE(c);
    CHECK(*c == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const HermitianMatrix s = frame_operator(f);
    CHECK(max_abs_diff(s.matrix(), ComplexMatrix::identity(2) * cplx{2.0, 0.0}) <= 1e-14);
}

TEST_CASE("orthonormal bases have c = 0") {
    for (std::size_t d = 1; d <= 5; ++d) {
        const Frame f = orthonormal_basis(d);
        CHECK(is_tight(f));
        if (d >= 2) {
            const auto c = is_equiangular(f);
            REQUIRE(c);
            CHECK(*c == 0.0);
        }
    }
    CHECK_THROWS_AS(is_equiangular(orthonormal_basis(1)), DomainError);
}

TEST_CASE("catalog frames are ETFs with the coherence formula") {
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        CHECK(is_tight(f));
        const auto c = is_equiangular(f);
        REQUIRE(c);
        CHECK(std::abs(*c - coherence_constant(f.size(), f.dim())) <= 1e-12);
    }
}

TEST_CASE("complement_etf dimensions and domain") {
    const Frame comp = complement_etf(test::sic_qutrit());
    CHECK(comp.size() == 9);
    CHECK(comp.dim() == 6);
    const auto c = is_equiangular(comp);
    REQUIRE(c);
    CHECK(*c == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK_THROWS_AS(complement_etf(orthonormal_basis(3)), DomainError);
    const Frame skew(2, {{1.0, 0.0}, {0.0, 1.0}, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}});
    CHECK_THROWS_AS(complement_etf(skew), ValidationError);
}

TEST_CASE("perturbed SIC is no longer tight") {
    ComplexMatrix kets = sic_qubit().kets();
    kets(1, 0) += 1e-3;
    double norm = 0.0;
    for (const auto& z : kets.row(1)) {
        norm += std::norm(z);
    }
    for (auto& z : kets.row(1)) {
        z /= std::sqrt(norm);
    }
    const Frame f(kets);
    CHECK_FALSE(is_tight(f));
    CHECK_THROWS_AS(povm_from_frame(f), ValidationError);
}

TEST_CASE("POVM from a tight frame sums to the identity") {
    for (const auto& [name, f] : test::etf_catalog()) {
        CAPTURE(name);
        const Povm p = povm_from_frame(f);
        ComplexMatrix total(f.dim(), f.dim());
        for (const auto& e : p.elements()) {
            total += e.matrix();
        }
        CHECK(max_abs_diff(total, ComplexMatrix::identity(f.dim())) <= 1e-12);
    }
}

TEST_CASE("Povm validation") {
    const HermitianMatrix half(ComplexMatrix::identity(2) * cplx{0.5, 0.0});
    CHECK_NOTHROW(Povm({half, half}));
    CHECK_THROWS_AS(Povm({half}), ValidationError);
    const HermitianMatrix neg(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}});
    const HermitianMatrix rest(ComplexMatrix{{-0.5, 0.0}, {0.0, 1.5}});
    CHECK_THROWS_AS(Povm({neg, rest}), ValidationError);
}

TEST_CASE("DensityMatrix validation and constructors") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)), ValidationError);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), ValidationError);
    const DensityMatrix mm = DensityMatrix::maximally_mixed(3);
    CHECK(purity(mm) == doctest::Approx(1.0 / 3.0));
    const std::vector<cplx> psi = {1.0 / std::sqrt(2.0), cplx{0.0, 1.0 / std::sqrt(2.0)}};
    CHECK(purity(DensityMatrix::pure(psi)) == doctest::Approx(1.0));
}

TEST_CASE("outcome probabilities form a distribution") {
    Rng rng(11);
    const Frame f = test::sic_qutrit();
    const Povm p = povm_from_frame(f);
    for (int k = 0; k < 20; ++k) {
        const ProbabilityVector q = outcome_probabilities(p, test::random_state(3, rng, k));
        double total = 0.0;
        for (double x : q) {
            CHECK(x >= 0.0);
            total += x;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    // I/d gives the uniform distribution over n outcomes.
    const ProbabilityVector u = outcome_probabilities(p, DensityMatrix::maximally_mixed(3));
    for (double x : u) {
        CHECK(x == doctest::Approx(1.0 / 9.0));
    }
}

TEST_CASE("frame_mixture") {
    const Frame f = sic_qubit();
    const std::vector<double> w = {0.5, 0.5, 0.0, 0.0};
    const DensityMatrix rho = frame_mixture(f, w);
    // (1 + 1 + 2 |<phi_0|phi_1>|^2) / 4 = 2/3
    CHECK(purity(rho) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    const std::vector<double> uniform(4, 0.25);
    CHECK(max_abs_diff(frame_mixture(f, uniform).matrix(), DensityMatrix::maximally_mixed(2).matrix()) <= 1e-15);
    CHECK_THROWS_AS(frame_mixture(f, std::vector<double>{1.0}), DimensionError);
    CHECK_THROWS_AS(frame_mixture(f, std::vector<double>{1.5, -0.5, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(frame_mixture(f, std::vector<double>{0.5, 0.0, 0.0, 0.0}), ValidationError);
}

TEST_CASE("random states are valid with the requested rank") {
    Rng rng(12);
    for (std::size_t d = 1; d <= 6; ++d) {
        for (std::size_t rank = 1; rank <= d; ++rank) {
            const DensityMatrix rho = random_density_matrix(d, rng, rank);
            const Spectrum s = hermitian_eig(rho.hermitian());
            std::size_t nonzero = 0;
            for (double v : s.eigenvalues) {
                CHECK(v >= -1e-12);
                nonzero += v > 1e-10 ? 1 : 0;
            }
            CHECK(nonzero == rank);
        }
        CHECK(purity(random_pure_state(d, rng)) == doctest::Approx(1.0));
    }
    const auto w = random_weights(5, rng);
    double total = 0.0;
    for (double x : w) {
        CHECK(x >= 0.0);
        total += x;
    }
    CHECK(total == doctest::Approx(1.0));
}
