#include <cmath>
#include <doctest.h>

#include "fzwave/mittag_leffler.hpp"

using fzwave::special::mittag_leffler;
using fzwave::special::ml_domain_error;
using fzwave::special::reciprocal_gamma;

TEST_CASE("reciprocal_gamma") {
    CHECK(reciprocal_gamma(1.0) == doctest::Approx(1.0));
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(reciprocal_gamma(5.0) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-2.0) == 0.0);
    // reflection branch
    CHECK(reciprocal_gamma(-0.5) == doctest::Approx(1.0 / std::tgamma(-0.5)).epsilon(1e-13));
    CHECK(reciprocal_gamma(-3.7) == doctest::Approx(1.0 / std::tgamma(-3.7)).epsilon(1e-12));
}

TEST_CASE("classical special cases") {
    CHECK(mittag_leffler(1.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(mittag_leffler(1.0, 1.0, -3.0) == doctest::Approx(std::exp(-3.0)).epsilon(1e-10));
    const double x = M_PI / 2.0;
    CHECK(mittag_leffler(2.0, 1.0, -x * x) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(mittag_leffler(2.0, 1.0, -1.0) == doctest::Approx(std::cos(1.0)).epsilon(1e-12));
    CHECK(mittag_leffler(2.0, 2.0, -1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(mittag_leffler(0.7, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(mittag_leffler(0.7, 0.3, 0.0) == doctest::Approx(reciprocal_gamma(0.3)).epsilon(1e-13));
}

TEST_CASE("E_{1,2}(z) = (e^z - 1)/z across regimes") {
    for (double z : {-8.0, -1.5, -0.2, 0.3, 2.0, 10.0}) {
        const double want = std::expm1(z) / z;
        CHECK(mittag_leffler(1.0, 2.0, z) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("E_{1/2,1}(z) = e^{z^2} erfc(-z)") {
    for (double z : {-20.0, -5.0, -1.2, 0.5, 1.5}) {
        const double want = std::exp(z * z) * std::erfc(-z);
        CHECK(mittag_leffler(0.5, 1.0, z) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("recurrence E_{a,b}(z) = z E_{a,a+b}(z) + 1/Gamma(b)") {
    for (double a : {0.23, 0.5, 0.8})
        for (double z : {-30.0, -4.0, -0.7, 0.4}) {
            const double lhs = mittag_leffler(a, a, z);
            const double rhs = z * mittag_leffler(a, 2.0 * a, z) + reciprocal_gamma(a);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
}

TEST_CASE("negative-tail asymptotics E_{a,a}(-x) ~ decay, stays accurate") {
    // For b = a the leading 1/Gamma(b-a) reflection term vanishes, so
    // E_{a,a}(-x) ~ -a x^{-2} / Gamma(-a) as x -> infinity.
    const double a = 0.4;
    const double x = 2000.0;
    const double want = 1.0 / (x * x) * a / std::tgamma(1.0 - a);  // = -a/Gamma(-a)/x^2
    CHECK(mittag_leffler(a, a, -x) == doctest::Approx(want).epsilon(5e-3));
}

TEST_CASE("complete monotonicity sign pattern of E_{a,a}(-x)") {
    double prev = mittag_leffler(0.3, 0.3, 0.0);
    for (double x = 0.25; x <= 60.0; x *= 2.0) {
        const double v = mittag_leffler(0.3, 0.3, -x);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("invalid parameters raise") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 0.5), ml_domain_error);
    CHECK_THROWS_AS(mittag_leffler(-0.3, 1.0, 0.5), ml_domain_error);
}
