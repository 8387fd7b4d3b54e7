#include "fzwave/fundsol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fzwave/quadrature.hpp"

namespace fzwave::fundsol {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sqrt of r(q) = (1 + tau q^alpha e^{i alpha pi}) / (1 + q^alpha e^{i alpha pi}),
// expressed through v = q^alpha to stay stable when q underflows.
Complex sqrt_r_of_v(double v, const ZenerParams& p) {
    const Complex w = v * Complex(std::cos(p.alpha * kPi), std::sin(p.alpha * kPi));
    return std::sqrt((1.0 + p.tau * w) / (1.0 + w));
}

double cone_distance(const SpacetimePoint& pt, const ZenerParams& p) {
    return pt.t - std::abs(pt.x) * std::sqrt(p.tau);
}

// Largest real part of the exponent q(|x| Re sqrt(r) - t) over (0, q_max]:
// the conditioning scale of the oscillatory integral.
double max_exponent(const SpacetimePoint& pt, const ZenerParams& p, double q_max) {
    const double ax = std::abs(pt.x);
    double best = -std::numeric_limits<double>::infinity();
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
        const double lq = -3.0 + (std::log10(q_max) + 3.0) * static_cast<double>(i) / n;
        const double q = std::pow(10.0, lq);
        const double re = sqrt_r_of_v(std::pow(q, p.alpha), p).real();
        best = std::max(best, q * (ax * re - pt.t));
    }
    return best;
}

// Laplace-method estimate of log|S|: min over real a of a(t - |x| sqrt(R(a))).
// Deeply negative values certify the point is in the super-exponentially
// attenuated zone between the slow pulse and the fast front.
double attenuation_exponent(const SpacetimePoint& pt, const ZenerParams& p) {
    const double ax = std::abs(pt.x);
    double best = 0.0;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
        const double a = std::pow(10.0, -2.0 + 16.0 * static_cast<double>(i) / n);
        const double va = std::pow(a, p.alpha);
        const double root = std::sqrt((1.0 + p.tau * va) / (1.0 + va));
        best = std::min(best, a * (pt.t - ax * root));
    }
    return best;
}

enum class Mode { kValue, kTimeDerivative };

double classical_solution(const SpacetimePoint& pt, const ZenerParams& p, Mode mode) {
    const double c = std::sqrt(zener::classical_modulus(p));
    if (std::abs(pt.x) >= c * pt.t) return 0.0;
    return mode == Mode::kValue ? 1.0 / (2.0 * c) : 0.0;
}

double evaluate(const SpacetimePoint& pt, const ZenerParams& p, const QuadratureConfig& cfg,
                Mode mode, double c0) {
    if (pt.t == 0.0) return 0.0;
    if (p.alpha == 0.0) return classical_solution(pt, p, mode);

    const double d = cone_distance(pt, p);
    if (d <= 0.0) return 0.0;

    const double atten = attenuation_exponent(pt, p);
    if (atten < -40.0) return 0.0;
    if (d < cfg.cone_margin_min)
        throw cone_proximity_error("fundsol: point too close to the cone boundary for the "
                                   "requested tolerance");

    const double ax = std::abs(pt.x);
    // Truncate where the exponent profile has genuinely decayed. Near the fast
    // front Re sqrt(r) approaches sqrt(tau) only like q^{-alpha}, so the naive
    // bound tail_decay_target / d can land in a still-oscillating region.
    auto exponent_at = [&](double q) {
        return q * (ax * sqrt_r_of_v(std::pow(q, p.alpha), p).real() - pt.t);
    };
    double q_max = cfg.tail_decay_target / d;
    for (int i = 0; exponent_at(q_max) > -cfg.tail_decay_target ||
                    exponent_at(2.0 * q_max) > -cfg.tail_decay_target;
         ++i) {
        if (i >= 400)
            throw quad::convergence_error("fundsol: integrand tail does not reach the decay "
                                          "target");
        q_max *= 1.5;
    }
    if (max_exponent(pt, p, q_max) > 28.0)
        throw quad::convergence_error("fundsol: oscillatory integrand exceeds double-precision "
                                      "conditioning in the attenuation zone");

    // Substitution q = u^{1/alpha} regularizes the q^{alpha-1} endpoint:
    // dq/q = du/(alpha u) and q^alpha = u exactly.
    const double inv_alpha = 1.0 / p.alpha;
    const double u_max = std::pow(q_max, p.alpha);
    auto g = [&](double u) -> double {
        if (u <= 0.0) return 0.0;
        const Complex root = sqrt_r_of_v(u, p);
        const double q = std::pow(u, inv_alpha);
        const Complex val = root * std::exp(-q * (pt.t - ax * root));
        if (mode == Mode::kValue) return val.imag() / (2.0 * kPi * p.alpha * u);
        // d/dt brings down -q; the u^{1/alpha - 1} Jacobian remains.
        return -val.imag() * std::pow(u, inv_alpha - 1.0) / (2.0 * kPi * p.alpha);
    };
    const double integral =
        quad::integrate_checked(g, 0.0, u_max, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
    return (mode == Mode::kValue ? c0 : 0.0) + integral;
}

}  // namespace

double integrand(double q, const SpacetimePoint& pt, const ZenerParams& p) {
    if (q <= 0.0) throw std::invalid_argument("fundsol::integrand: q must be positive");
    const Complex root = sqrt_r_of_v(std::pow(q, p.alpha), p);
    const Complex val = root * std::exp(-q * (pt.t - std::abs(pt.x) * root));
    return val.imag() / (2.0 * kPi * q);
}

double fundamental_solution(const SpacetimePoint& pt, const ZenerParams& p,
                            const QuadratureConfig& cfg) {
    return evaluate(pt, p, cfg, Mode::kValue, 0.5);
}

double fundsol_dt(const SpacetimePoint& pt, const ZenerParams& p, const QuadratureConfig& cfg) {
    return evaluate(pt, p, cfg, Mode::kTimeDerivative, 0.5);
}

Complex laplace_image_S(double x, Complex s, const ZenerParams& p) {
    if (s.imag() == 0.0 && s.real() <= 0.0)
        throw branch_cut_error("laplace_image_S: s lies on the branch cut (-inf, 0]");
    const Complex sa = std::pow(s, p.alpha);
    const Complex root = std::sqrt((1.0 + p.tau * sa) / (1.0 + sa));
    return root / (2.0 * s) * std::exp(-std::abs(x) * s * root);
}

namespace detail {
double fundsol_with_constant(const SpacetimePoint& pt, const ZenerParams& p,
                             const QuadratureConfig& cfg, double c0) {
    return evaluate(pt, p, cfg, Mode::kValue, c0);
}
}  // namespace detail

}  // namespace fzwave::fundsol
