#include <cmath>
#include <complex>
#include <doctest.h>
#include <random>

#include "fzwave/zener.hpp"

using namespace fzwave;

TEST_CASE("ZenerParams validation") {
    CHECK_NOTHROW(ZenerParams(0.0, 1.0));
    CHECK_NOTHROW(ZenerParams(0.999, 0.001));
    CHECK_THROWS_AS(ZenerParams(1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ZenerParams(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ZenerParams(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ZenerParams(0.5, 1.5), std::invalid_argument);
}

TEST_CASE("symbol closed-form spot values") {
    ZenerParams p(0.23, 0.004);
    CHECK(zener::symbol(Complex(1.0, 0.0), p).real() == doctest::Approx(2.0 / 1.004).epsilon(1e-12));
    CHECK(zener::symbol(Complex(1.0, 0.0), p).imag() == doctest::Approx(0.0));

    ZenerParams unit(0.37, 1.0);
    for (double re : {0.2, 1.0, 7.0})
        for (double im : {-3.0, 0.5}) {
            const auto v = zener::symbol(Complex(re, im), unit);
            CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-13));
        }

    // asymptote 1/tau as s -> +infinity along the real axis
    ZenerParams q(0.5, 0.25);
    CHECK(zener::symbol(Complex(1e12, 0.0), q).real() == doctest::Approx(4.0).epsilon(1e-5));

    CHECK_THROWS_AS(zener::symbol(Complex(-1.0, 0.0), p), branch_cut_error);
    CHECK_THROWS_AS(zener::symbol(Complex(0.0, 0.0), p), branch_cut_error);
}

TEST_CASE("omega spot values and relation to the symbol") {
    ZenerParams p(0.23, 0.004);
    CHECK(zener::omega(Complex(1.0, 0.0), p).real() == doctest::Approx(1.004 / 2.0).epsilon(1e-12));

    ZenerParams a0(0.0, 0.25);
    CHECK(zener::omega(Complex(2.0, 0.0), a0).real() == doctest::Approx(2.5).epsilon(1e-12));

    std::mt19937 rng(91);
    std::uniform_real_distribution<double> re_dist(0.01, 10.0), im_dist(-10.0, 10.0);
    ZenerParams m(0.6, 0.3);
    for (int i = 0; i < 1000; ++i) {
        const Complex s(re_dist(rng), im_dist(rng));
        const Complex lhs = zener::omega(s, m);
        const Complex rhs = s * s / zener::symbol(s, m);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("conjugate symmetry") {
    ZenerParams p(0.45, 0.1);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re_dist(0.05, 5.0), im_dist(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const Complex s(re_dist(rng), im_dist(rng));
        CHECK(std::abs(zener::symbol(std::conj(s), p) - std::conj(zener::symbol(s, p))) < 1e-13);
        CHECK(std::abs(zener::omega(std::conj(s), p) - std::conj(zener::omega(s, p))) <
              1e-12 * std::abs(zener::omega(s, p)));
    }
}

TEST_CASE("omega_polar agrees with direct complex evaluation") {
    ZenerParams p(0.23, 0.004);
    const Complex s = std::polar(1.0, M_PI / 4.0);
    const Complex direct = zener::omega(s, p);
    const Complex polar = zener::omega_polar(1.0, M_PI / 4.0, p);
    CHECK(std::abs(direct - polar) <= 1e-12 * std::abs(direct));

    // tau = 1: omega = s^2
    ZenerParams unit(0.6, 1.0);
    const Complex w = zener::omega_polar(2.0, 0.7, unit);
    CHECK(w.real() == doctest::Approx(4.0 * std::cos(1.4)).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(4.0 * std::sin(1.4)).epsilon(1e-12));

    // real s gives real omega
    ZenerParams q(0.5, 0.3);
    CHECK(zener::omega_polar(1.0, 0.0, q).imag() == doctest::Approx(0.0));
    CHECK(zener::omega_polar(1.0, 0.0, q).real() == doctest::Approx((1.0 + 0.3) / 2.0).epsilon(1e-12));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> rho_dist(-3.0, 3.0), phi_dist(-1.5, 1.5);
    ZenerParams m(0.77, 0.2);
    for (int i = 0; i < 1000; ++i) {
        const double rho = std::pow(10.0, rho_dist(rng));
        const double phi = phi_dist(rng);
        const Complex a = zener::omega_polar(rho, phi, m);
        const Complex b = zener::omega(std::polar(rho, phi), m);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }
}

TEST_CASE("sector_margin is positive across the parameter square") {
    for (double alpha : {0.0, 0.23, 0.5, 0.75, 0.95})
        for (double tau : {0.004, 0.1, 0.5, 0.9, 1.0}) {
            const double m = zener::sector_margin(ZenerParams(alpha, tau), 10000);
            CHECK(m > 0.0);
        }
}

TEST_CASE("relaxation kernel") {
    ZenerParams p(0.5, 0.5);
    CHECK(zener::delta_weight(p) == doctest::Approx(2.0));

    // tau = 1: regular part vanishes identically
    ZenerParams unit(0.5, 1.0);
    for (double t : {0.1, 1.0, 10.0})
        CHECK(zener::relaxation_kernel_regular(t, unit) == doctest::Approx(0.0));

    // tau < 1: strictly negative
    for (double t : {0.01, 0.5, 3.0, 50.0})
        CHECK(zener::relaxation_kernel_regular(t, p) < 0.0);

    CHECK_THROWS_AS(zener::relaxation_kernel_regular(0.0, p), std::invalid_argument);
    CHECK_THROWS_AS(zener::relaxation_kernel_regular(1.0, ZenerParams(0.0, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("limit moduli and front speed") {
    ZenerParams p(0.5, 0.25);
    CHECK(zener::classical_modulus(p) == doctest::Approx(2.0 / 1.25).epsilon(1e-15));
    CHECK(zener::front_speed(p) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(zener::front_speed(ZenerParams(0.3, 1.0)) == doctest::Approx(1.0));
}
