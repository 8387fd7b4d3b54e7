#include "fzwave/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "fzwave/fraccalc.hpp"

namespace fzwave::scaling {

std::pair<ZenerParams, ScaleFactors> nondimensionalize(const PhysicalMaterial& m) {
    if (m.alpha == 0.0)
        throw std::invalid_argument(
            "nondimensionalize: alpha = 0 leaves the time scale undefined; supply "
            "dimensionless parameters directly");
    const double t_star = std::pow(m.tau_eps, 1.0 / m.alpha);
    const double x_star = t_star * std::sqrt(m.modulus / m.density);
    return {ZenerParams(m.alpha, m.tau_sigma / m.tau_eps), ScaleFactors{x_star, t_star}};
}

double scale_lemma_check(const Field& y, const TimeGrid& grid, double alpha, double t_star) {
    if (y.size() != grid.size())
        throw std::invalid_argument("scale_lemma_check: sample count does not match grid");
    if (t_star <= 0.0) throw std::invalid_argument("scale_lemma_check: t_star must be positive");
    if (alpha == 0.0) return 0.0;  // both sides are the identity

    auto sample = [&](const Field& f, double t) -> double {
        const double pos = t / grid.dt;
        if (pos <= 0.0) return f.front();
        if (pos >= static_cast<double>(grid.n_steps)) return f.back();
        const auto k = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(k);
        return f[k] * (1.0 - frac) + f[k + 1] * frac;
    };

    // ybar(tbar) = y(tbar * T*) on its own grid of the same step, kept
    // inside the sampled range of y.
    const double span = grid.horizon() / std::max(t_star, 1.0);
    const auto m_steps = static_cast<std::size_t>(std::floor(span / grid.dt));
    if (m_steps < 4)
        throw std::invalid_argument("scale_lemma_check: grid too short for the rescaled signal");
    const TimeGrid bar_grid(grid.dt, m_steps);
    Field ybar(bar_grid.size());
    for (std::size_t k = 0; k < bar_grid.size(); ++k)
        ybar[k] = sample(y, bar_grid.time(k) * t_star);

    const Field lhs = fraccalc::rl_derivative(ybar, bar_grid, alpha);
    const Field rhs_full = fraccalc::rl_derivative(y, grid, alpha);

    const double scale = std::pow(t_star, alpha);
    double dev = 0.0;
    for (std::size_t k = 1; k < bar_grid.size(); ++k) {
        const double rhs = scale * sample(rhs_full, bar_grid.time(k) * t_star);
        dev = std::max(dev, std::abs(lhs[k] - rhs));
    }
    return dev;
}

double wave_front_speed(const PhysicalMaterial& m) {
    return std::sqrt(m.modulus / m.density) * std::sqrt(m.tau_eps / m.tau_sigma);
}

}  // namespace fzwave::scaling
