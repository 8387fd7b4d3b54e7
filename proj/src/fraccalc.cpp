#include "fzwave/fraccalc.hpp"

#include <cmath>
#include <stdexcept>

namespace fzwave::fraccalc {

std::vector<double> gl_weights(double alpha, std::size_t n) {
    std::vector<double> w(n + 1);
    w[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        w[k] = w[k - 1] * ((static_cast<double>(k) - 1.0 - alpha) / static_cast<double>(k));
    }
    return w;
}

namespace {

Field gl_convolve(const Field& samples, const std::vector<double>& w, double scale) {
    const std::size_t m = samples.size();
    Field out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) acc += w[k] * samples[i - k];
        out[i] = scale * acc;
    }
    return out;
}

}  // namespace

Field rl_derivative(const Field& samples, const TimeGrid& grid, double alpha) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("rl_derivative: sample count does not match grid");
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("rl_derivative: alpha must lie in [0,1)");
    if (alpha == 0.0) return samples;
    const auto w = gl_weights(alpha, grid.n_steps);
    return gl_convolve(samples, w, std::pow(grid.dt, -alpha));
}

Field rl_integral(const Field& samples, const TimeGrid& grid, double alpha) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("rl_integral: sample count does not match grid");
    if (alpha <= 0.0) throw std::invalid_argument("rl_integral: alpha must be positive");
    const auto w = gl_weights(-alpha, grid.n_steps);
    return gl_convolve(samples, w, std::pow(grid.dt, alpha));
}

double f_alpha_kernel(double alpha, double t) {
    if (alpha <= 0.0) throw std::invalid_argument("f_alpha_kernel: alpha must be positive");
    if (t <= 0.0) throw std::invalid_argument("f_alpha_kernel: t must be positive");
    return std::pow(t, alpha - 1.0) / std::tgamma(alpha);
}

}  // namespace fzwave::fraccalc
