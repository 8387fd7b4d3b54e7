#include <cmath>
#include <doctest.h>

#include "fzwave/fraccalc.hpp"

using namespace fzwave;
using namespace fzwave::fraccalc;

namespace {

// Independent oracle: w_k = (-1)^k binom(alpha, k) by direct product.
double binomial_weight(double alpha, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= (alpha - i) / (i + 1);
    return (k % 2 == 0 ? prod : -prod);
}

double rl_at_one(double alpha, std::size_t n, double (*y)(double)) {
    TimeGrid grid(1.0 / static_cast<double>(n), n);
    Field samples(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) samples[k] = y(grid.time(k));
    return rl_derivative(samples, grid, alpha).back();
}

}  // namespace

TEST_CASE("gl_weights matches the binomial expansion of (1-z)^alpha") {
    auto w0 = gl_weights(0.0, 3);
    CHECK(w0 == std::vector<double>{1.0, 0.0, 0.0, 0.0});

    auto w1 = gl_weights(1.0, 3);
    CHECK(w1 == std::vector<double>{1.0, -1.0, 0.0, 0.0});

    auto wh = gl_weights(0.5, 3);
    CHECK(wh[0] == doctest::Approx(1.0));
    CHECK(wh[1] == doctest::Approx(-0.5));
    CHECK(wh[2] == doctest::Approx(-0.125));
    CHECK(wh[3] == doctest::Approx(-0.0625));

    for (double alpha : {0.1, 0.37, 0.8}) {
        auto w = gl_weights(alpha, 20);
        for (int k = 0; k <= 20; ++k)
            CHECK(w[k] == doctest::Approx(binomial_weight(alpha, k)).epsilon(1e-13));
    }
}

TEST_CASE("gl_weights partial sums decrease toward zero") {
    const auto w = gl_weights(0.6, 4000);
    double partial = w[0];
    double prev = partial;
    for (std::size_t k = 1; k < w.size(); ++k) {
        partial += w[k];
        CHECK(partial <= prev + 1e-15);
        prev = partial;
    }
    CHECK(partial < 0.01);
    CHECK(partial > 0.0);
}

TEST_CASE("rl_derivative closed forms at t=1") {
    // y = t: derivative is t^{1-alpha}/Gamma(2-alpha)
    const double want_linear = 1.0 / std::tgamma(1.5);
    const double coarse = rl_at_one(0.5, 64, [](double t) { return t; });
    const double fine = rl_at_one(0.5, 1024, [](double t) { return t; });
    CHECK(fine == doctest::Approx(want_linear).epsilon(2e-3));
    CHECK(std::abs(fine - want_linear) < std::abs(coarse - want_linear));

    // y = 1: derivative is t^{-alpha}/Gamma(1-alpha)
    const double want_const = 1.0 / std::sqrt(M_PI);
    CHECK(rl_at_one(0.5, 2048, [](double) { return 1.0; }) ==
          doctest::Approx(want_const).epsilon(2e-3));

    // alpha = 0 is the identity
    TimeGrid grid(0.1, 10);
    Field c(grid.size(), 3.25);
    CHECK(rl_derivative(c, grid, 0.0) == c);
}

TEST_CASE("rl_derivative is first-order in dt on y = t^2") {
    const double want = std::pow(1.0, 1.5) / std::tgamma(2.5) * 2.0;  // 2 t^{1.5}/Gamma(2.5)...
    auto err = [&](std::size_t n) {
        return std::abs(rl_at_one(0.5, n, [](double t) { return t * t; }) - want);
    };
    const double e1 = err(128), e2 = err(256), e3 = err(512);
    const double order1 = std::log2(e1 / e2);
    const double order2 = std::log2(e2 / e3);
    CHECK(order1 > 0.9);
    CHECK(order2 > 0.9);
}

TEST_CASE("fractional differentiation then integration is near-identity") {
    TimeGrid grid(1.0 / 512.0, 512);
    Field y(grid.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double t = grid.time(k);
        y[k] = t * t * (1.0 - t);
    }
    const auto dy = rl_derivative(y, grid, 0.4);
    const auto back = rl_integral(dy, grid, 0.4);
    for (std::size_t k = 0; k < y.size(); ++k) CHECK(back[k] == doctest::Approx(y[k]).epsilon(0.02));
}

TEST_CASE("f_alpha_kernel") {
    CHECK(f_alpha_kernel(1.0, 7.0) == doctest::Approx(1.0));
    CHECK(f_alpha_kernel(2.0, 3.0) == doctest::Approx(3.0));
    CHECK(f_alpha_kernel(0.5, 1.0) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(f_alpha_kernel(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f_alpha_kernel(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("rl_derivative rejects mismatched grid length") {
    TimeGrid grid(0.1, 10);
    Field wrong(5, 1.0);
    CHECK_THROWS_AS(rl_derivative(wrong, grid, 0.5), std::invalid_argument);
}
