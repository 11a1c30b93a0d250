#include "kdf/entropy.hpp"
#include "kdf/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace kdf;

TEST_CASE("AlphaOrder domain") {
    CHECK_THROWS_AS(AlphaOrder(0.0), DomainError);
    CHECK_THROWS_AS(AlphaOrder(-1.0), DomainError);
    CHECK_THROWS_AS(AlphaOrder(std::nan("")), DomainError);
    CHECK(AlphaOrder::infinity().is_infinite());
    CHECK(AlphaOrder(1.0 + 1e-7).is_shannon());
    CHECK_FALSE(AlphaOrder(1.0 + 1e-5).is_shannon());
}

TEST_CASE("alpha_log") {
    CHECK(alpha_log(1.0, AlphaOrder(0.3)) == 0.0);
    CHECK(alpha_log(2.5, AlphaOrder(1.0)) == doctest::Approx(std::log(2.5)));
    CHECK(alpha_log(4.0, AlphaOrder(2.0)) == doctest::Approx(1.0 - 0.25));
    CHECK(alpha_log(3.0, AlphaOrder(0.5)) == doctest::Approx(2.0 * (std::sqrt(3.0) - 1.0)));
    // Continuous through alpha = 1.
    CHECK(std::abs(alpha_log(3.0, AlphaOrder(1.0 + 1e-6 * 1.5)) - std::log(3.0)) < 1e-5);
    CHECK_THROWS_AS(alpha_log(0.0, AlphaOrder(2.0)), DomainError);
    CHECK_THROWS_AS(alpha_log(2.0, AlphaOrder::infinity()), DomainError);
}

TEST_CASE("ProbabilityVector") {
    CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), ValidationError);
    CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(ProbabilityVector({1.1, -0.1}), ValidationError);
    const ProbabilityVector p({1.0 + 1e-13, -1e-13});
    CHECK(p[1] == 0.0);
    CHECK(p.max() == doctest::Approx(1.0));
    CHECK(ProbabilityVector::uniform(4)[3] == 0.25);
    CHECK(ProbabilityVector::one_hot(3, 1)[1] == 1.0);
}

TEST_CASE("entropies of uniform and one-hot distributions") {
    const ProbabilityVector u = ProbabilityVector::uniform(5);
    const ProbabilityVector e = ProbabilityVector::one_hot(5, 2);
    for (double a : {0.25, 0.5, 1.0, 2.0, 3.0, 10.0, kInfinity}) {
        const AlphaOrder alpha(a);
        CHECK(renyi_entropy(u, alpha) == doctest::Approx(std::log(5.0)).epsilon(1e-13));
        CHECK(renyi_entropy(e, alpha) == doctest::Approx(0.0));
        if (!alpha.is_infinite()) {
            CHECK(tsallis_entropy(e, alpha) == doctest::Approx(0.0));
            CHECK(tsallis_entropy(u, alpha) == doctest::Approx(alpha_log(5.0, alpha)).epsilon(1e-13));
        }
    }
    CHECK(shannon_entropy(u) == doctest::Approx(std::log(5.0)));
}

TEST_CASE("special orders") {
    const ProbabilityVector p({0.5, 0.3, 0.2});
    const double ic = 0.25 + 0.09 + 0.04;
    CHECK(index_of_coincidence(p) == doctest::Approx(ic));
    CHECK(renyi_entropy(p, AlphaOrder(2.0)) == doctest::Approx(-std::log(ic)));
    CHECK(tsallis_entropy(p, AlphaOrder(2.0)) == doctest::Approx(1.0 - ic));
    CHECK(renyi_entropy(p, AlphaOrder::infinity()) == doctest::Approx(-std::log(0.5)));
    CHECK_THROWS_AS(tsallis_entropy(p, AlphaOrder::infinity()), DomainError);
    const double h = -(0.5 * std::log(0.5) + 0.3 * std::log(0.3) + 0.2 * std::log(0.2));
    CHECK(shannon_entropy(p) == doctest::Approx(h));
    CHECK(renyi_entropy(p, AlphaOrder(1.0)) == doctest::Approx(h));
    CHECK(tsallis_entropy(p, AlphaOrder(1.0)) == doctest::Approx(h));
    // Both sides of the Shannon branch agree with the limit.
    CHECK(std::abs(renyi_entropy(p, AlphaOrder(1.0 + 2e-6)) - h) < 1e-5);
    CHECK(std::abs(tsallis_entropy(p, AlphaOrder(1.0 - 2e-6)) - h) < 1e-5);
}

TEST_CASE("zero probabilities drop out") {
    const ProbabilityVector p({0.5, 0.5, 0.0});
    for (double a : {0.3, 1.0, 2.0, 7.0}) {
        CHECK(renyi_entropy(p, AlphaOrder(a)) == doctest::Approx(std::log(2.0)));
    }
}

TEST_CASE("Renyi entropy is non-increasing in alpha") {
    const ProbabilityVector p({0.4, 0.3, 0.2, 0.1});
    double prev = renyi_entropy(p, AlphaOrder(0.1));
    for (double a = 0.2; a < 20.0; a *= 1.3) {
        const double cur = renyi_entropy(p, AlphaOrder(a));
        CHECK(cur <= prev + 1e-14);
        prev = cur;
    }
    CHECK(renyi_entropy(p, AlphaOrder::infinity()) <= prev);
}

TEST_CASE("renyi_interpolation_bound") {
    CHECK(renyi_interpolation_bound(1.0, 0.4, AlphaOrder(2.0)) == 1.0);
    CHECK(renyi_interpolation_bound(1.0, 0.4, AlphaOrder::infinity()) == 0.4);
    CHECK(renyi_interpolation_bound(1.0, 0.4, AlphaOrder(3.0)) == doctest::Approx(0.5 * 0.4 + 0.5 * 1.0));
    CHECK_THROWS_AS(renyi_interpolation_bound(1.0, 0.4, AlphaOrder(1.5)), DomainError);
    CHECK_THROWS_AS(renyi_interpolation_bound(0.3, 0.4, AlphaOrder(3.0)), DomainError);
    CHECK_THROWS_AS(renyi_interpolation_bound(0.3, -0.1, AlphaOrder(3.0)), DomainError);
    // Interpolation lower-bounds the true entropy for any distribution.
    const ProbabilityVector p({0.6, 0.2, 0.1, 0.1});
    const double r2 = renyi_entropy(p, AlphaOrder(2.0));
    const double rinf = renyi_entropy(p, AlphaOrder::infinity());
    for (double a : {2.0, 2.5, 4.0, 9.0}) {
        CHECK(renyi_entropy(p, AlphaOrder(a)) >= renyi_interpolation_bound(r2, rinf, AlphaOrder(a)) - 1e-14);
    }
}

TEST_CASE("majorization") {
    const ProbabilityVector flat = ProbabilityVector::uniform(4);
    const ProbabilityVector peaked({0.7, 0.1, 0.1, 0.1});
    CHECK(is_majorized_by(flat, peaked));
    CHECK_FALSE(is_majorized_by(peaked, flat));
    // Padding: a 2-outcome distribution against a 3-outcome one.
    CHECK(is_majorized_by(ProbabilityVector({0.4, 0.3, 0.3}), ProbabilityVector({0.5, 0.5})));
}
