#include "fzwave/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fzwave/fraccalc.hpp"
#include "fzwave/quadrature.hpp"

namespace fzwave::oracles {

namespace {

constexpr double kPi = 3.14159265358979323846;

double linear_interp(const Field& y, const Grid1D& grid, double x) {
    const double pos = (x - grid.x_min) / grid.dx;
    if (pos <= 0.0 || pos >= static_cast<double>(grid.n - 1)) return 0.0;
    const auto j = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(j);
    return y[j] * (1.0 - frac) + y[j + 1] * frac;
}

// Integral of the piecewise-linear extension of y over [lo, hi], zero
// outside the grid.
double interp_integral(const Field& y, const Grid1D& grid, double lo, double hi) {
    if (hi <= lo) return 0.0;
    lo = std::max(lo, grid.x_min);
    hi = std::min(hi, grid.x_max());
    if (hi <= lo) return 0.0;
    // Trapezoid over the covered nodes plus linear end corrections.
    auto antideriv_step = [&](double a, double b) {
        return 0.5 * (linear_interp(y, grid, a) + linear_interp(y, grid, b)) * (b - a);
    };
    const auto j_lo = static_cast<std::size_t>(std::ceil((lo - grid.x_min) / grid.dx));
    const auto j_hi = static_cast<std::size_t>(std::floor((hi - grid.x_min) / grid.dx));
    if (j_lo > j_hi) return antideriv_step(lo, hi);
    double total = antideriv_step(lo, grid.x(j_lo)) + antideriv_step(grid.x(j_hi), hi);
    for (std::size_t j = j_lo; j < j_hi; ++j) total += 0.5 * (y[j] + y[j + 1]) * grid.dx;
    return total;
}

}  // namespace

double bromwich_invert(const LaplaceImage& F, double t, double a, double h,
                       std::size_t n_terms) {
    if (t <= 0.0) throw std::invalid_argument("bromwich_invert: t must be positive");
    if (a <= 0.0 || h <= 0.0) throw std::invalid_argument("bromwich_invert: need a, h > 0");
    if (n_terms < 8) throw std::invalid_argument("bromwich_invert: too few terms");

    const std::size_t euler_m = std::min<std::size_t>(n_terms / 2, 32);
    const std::size_t total = n_terms + euler_m;

    // Partial sums of the folded trapezoid rule.
    std::vector<double> partial(total + 1);
    double sum = 0.5 * F(Complex(a, 0.0)).real();
    partial[0] = sum;
    double head_mag = 0.0, tail_mag = 0.0;
    for (std::size_t k = 1; k <= total; ++k) {
        const double y = static_cast<double>(k) * h;
        const Complex value = F(Complex(a, y));
        sum += (value * Complex(std::cos(y * t), std::sin(y * t))).real();
        partial[k] = sum;
        if (k <= 8) head_mag = std::max(head_mag, std::abs(value));
        if (k > total - 8) tail_mag = std::max(tail_mag, std::abs(value));
    }
    if (tail_mag > head_mag && tail_mag > 1e-8)
        throw quad::convergence_error("bromwich_invert: image does not decay along the line");

    // Euler (binomial) average of the last euler_m+1 partial sums.
    double acc = 0.0;
    double binom = 1.0;
    double binom_sum = 0.0;
    for (std::size_t k = 0; k <= euler_m; ++k) {
        acc += binom * partial[n_terms + k];
        binom_sum += binom;
        binom *= static_cast<double>(euler_m - k) / static_cast<double>(k + 1);
    }
    acc /= binom_sum;

    return std::exp(a * t) * h * acc / kPi;
}

double bromwich_invert(const LaplaceImage& F, double t) {
    // h = pi/t makes e^{iyt} alternate between samples; a = A/(2t) puts the
    // discretization error near e^{-A}.
    const double A = 25.0;
    return bromwich_invert(F, t, A / (2.0 * t), kPi / t, 80);
}

double talbot_invert(const LaplaceImage& F, double t, std::size_t degree) {
    if (t <= 0.0) throw std::invalid_argument("talbot_invert: t must be positive");
    if (degree < 8) throw std::invalid_argument("talbot_invert: degree too small");
    const double r = 2.0 * static_cast<double>(degree) / (5.0 * t);
    double sum = 0.5 * std::exp(r * t) * F(Complex(r, 0.0)).real();
    for (std::size_t k = 1; k < degree; ++k) {
        const double theta = kPi * static_cast<double>(k) / static_cast<double>(degree);
        const double cot = std::cos(theta) / std::sin(theta);
        const Complex s = r * theta * Complex(cot, 1.0);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        sum += (std::exp(s * t) * F(s) * Complex(1.0, sigma)).real();
    }
    return r * sum / static_cast<double>(degree);
}

Complex forward_laplace(const Field& samples, const TimeGrid& grid, Complex s) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("forward_laplace: sample count does not match grid");
    if (s.real() <= 0.0) throw std::invalid_argument("forward_laplace: need Re s > 0");

    Complex acc = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double w = (k == 0 || k == grid.n_steps) ? 0.5 : 1.0;
        acc += w * samples[k] * std::exp(-s * grid.time(k));
    }
    acc *= grid.dt;

    double scale = 0.0;
    for (double v : samples) scale = std::max(scale, std::abs(v));
    const double tail = std::abs(samples.back()) * std::exp(-s.real() * grid.horizon());
    if (tail > 1e-8 * std::max(scale * grid.dt, std::abs(acc)))
        throw quad::convergence_error("forward_laplace: grid horizon leaves a non-negligible tail");
    return acc;
}

double dalembert(const Field& u0, const Field& v0, const Grid1D& grid, double c,
                 const SpacetimePoint& pt) {
    if (c <= 0.0) throw std::invalid_argument("dalembert: wave speed must be positive");
    if (u0.size() != grid.n || v0.size() != grid.n)
        throw std::invalid_argument("dalembert: data does not match grid");
    const double left = linear_interp(u0, grid, pt.x - c * pt.t);
    const double right = linear_interp(u0, grid, pt.x + c * pt.t);
    const double vint = interp_integral(v0, grid, pt.x - c * pt.t, pt.x + c * pt.t);
    return 0.5 * (left + right) + vint / (2.0 * c);
}

FdtdResult fdtd_solve(const Field& u0, const Field& v0, const Grid1D& grid,
                      const ZenerParams& p, double dt, std::size_t n_steps,
                      double cfl_safety) {
    if (u0.size() != grid.n || v0.size() != grid.n)
        throw std::invalid_argument("fdtd_solve: data does not match grid");
    if (dt <= 0.0) throw std::invalid_argument("fdtd_solve: dt must be positive");
    if (dt > grid.dx * std::sqrt(p.tau) * cfl_safety)
        throw std::invalid_argument("fdtd_solve: dt violates the CFL bound dx*sqrt(tau)");

    const std::size_t n_half = grid.n - 1;
    const double inv_dx = 1.0 / grid.dx;
    const bool fractional = p.alpha > 0.0;
    const double dt_ma = fractional ? std::pow(dt, -p.alpha) : 1.0;
    const std::vector<double> w =
        fractional ? fraccalc::gl_weights(p.alpha, n_steps) : std::vector<double>{};

    FdtdResult out;
    out.grid = grid;
    out.time = TimeGrid(dt, n_steps);
    out.displacement.reserve(n_steps + 1);
    out.stress.reserve(n_steps + 1);

    // strain/stress history on half nodes, one row per time level
    std::vector<Field> eps_hist;
    std::vector<Field>& sig_hist = out.stress;

    auto strain_of = [&](const Field& u) {
        Field eps(n_half);
        for (std::size_t j = 0; j < n_half; ++j) eps[j] = (u[j + 1] - u[j]) * inv_dx;
        return eps;
    };

    // Constitutive solve for sigma at level n: GL weight w_0 = 1 on the
    // current sample makes the per-node equation linear with coefficient
    // 1 + tau dt^{-alpha} > 0.
    auto close_stress = [&](const Field& eps, std::size_t n) {
        Field sig(n_half);
        if (!fractional) {
            const double mod = 2.0 / (1.0 + p.tau);
            for (std::size_t j = 0; j < n_half; ++j) sig[j] = mod * eps[j];
            return sig;
        }
        const double denom = 1.0 + p.tau * dt_ma;
        for (std::size_t j = 0; j < n_half; ++j) {
            double mem_eps = 0.0, mem_sig = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                mem_eps += w[k] * eps_hist[n - k][j];
                mem_sig += w[k] * sig_hist[n - k][j];
            }
            sig[j] = (eps[j] * (1.0 + dt_ma) + dt_ma * (mem_eps - p.tau * mem_sig)) / denom;
        }
        return sig;
    };

    auto stress_divergence = [&](const Field& sig) {
        Field div(grid.n, 0.0);
        for (std::size_t j = 1; j + 1 < grid.n; ++j) div[j] = (sig[j] - sig[j - 1]) * inv_dx;
        return div;
    };

    // level 0
    out.displacement.push_back(u0);
    eps_hist.push_back(strain_of(u0));
    sig_hist.push_back(close_stress(eps_hist[0], 0));

    if (n_steps == 0) return out;

    // level 1 by Taylor start
    {
        const Field div0 = stress_divergence(sig_hist[0]);
        Field u1(grid.n);
        for (std::size_t j = 0; j < grid.n; ++j)
            u1[j] = u0[j] + dt * v0[j] + 0.5 * dt * dt * div0[j];
        u1.front() = 0.0;
        u1.back() = 0.0;
        out.displacement.push_back(std::move(u1));
        eps_hist.push_back(strain_of(out.displacement[1]));
        sig_hist.push_back(close_stress(eps_hist[1], 1));
    }

    for (std::size_t n = 1; n < n_steps; ++n) {
        const Field div = stress_divergence(sig_hist[n]);
        const Field& u_now = out.displacement[n];
        const Field& u_prev = out.displacement[n - 1];
        Field u_next(grid.n, 0.0);
        for (std::size_t j = 1; j + 1 < grid.n; ++j)
            u_next[j] = 2.0 * u_now[j] - u_prev[j] + dt * dt * div[j];
        out.displacement.push_back(std::move(u_next));
        eps_hist.push_back(strain_of(out.displacement[n + 1]));
        sig_hist.push_back(close_stress(eps_hist[n + 1], n + 1));
    }
    return out;
}

}  // namespace fzwave::oracles
