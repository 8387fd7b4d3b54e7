#pragma once

#include <stdexcept>

#include "fzwave/zener.hpp"

namespace fzwave {

/// Tolerances and truncation rules for the improper integrals.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    std::size_t max_subdivisions = 4000;
    /// q_max is chosen so q_max * (t - |x| sqrt(tau)) >= tail_decay_target.
    double tail_decay_target = 40.0;
    /// Minimum admissible distance t - |x| sqrt(tau) to the cone boundary.
    double cone_margin_min = 1e-4;
};

struct SpacetimePoint {
    double x;
    double t;

    SpacetimePoint(double x_, double t_) : x(x_), t(t_) {
        if (t < 0.0) throw std::invalid_argument("SpacetimePoint: t must be nonnegative");
    }
};

struct cone_proximity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace fundsol {

/// Real-axis integrand of the fundamental solution at wavenumber q > 0:
/// (1/2pi) Im[ sqrt(r(q)) e^{-q(t - |x| sqrt(r(q)))} ] / q, with
/// r(q) = (1 + tau q^alpha e^{i alpha pi}) / (1 + q^alpha e^{i alpha pi}).
/// Valid strictly inside the cone t > |x| sqrt(tau).
double integrand(double q, const SpacetimePoint& pt, const ZenerParams& p);

/// Fundamental solution S(x, t). Zero outside the cone |x| < t/sqrt(tau)
/// (and on its boundary); inside, 1/2 plus the real-axis integral, with the
/// endpoint singularity q^{alpha-1} absorbed by the substitution
/// q = u^{1/alpha}. Points closer to the cone boundary than
/// cfg.cone_margin_min raise cone_proximity_error. alpha = 0 takes the
/// classical closed form H(t - |x|/c)/(2c), c = sqrt(2/(1+tau)).
double fundamental_solution(const SpacetimePoint& pt, const ZenerParams& p,
                            const QuadratureConfig& cfg = {});

/// Time derivative of S, by differentiation under the integral sign.
/// This is the displacement response to a unit delta initial displacement.
double fundsol_dt(const SpacetimePoint& pt, const ZenerParams& p,
                  const QuadratureConfig& cfg = {});

/// Laplace image S~(x, s) = (1/2s) sqrt(R) e^{-|x| s sqrt(R)},
/// R = (1+tau s^alpha)/(1+s^alpha), Re s > 0.
Complex laplace_image_S(double x, Complex s, const ZenerParams& p);

namespace detail {
/// S with an explicit leading constant, for fault-injection checks of the
/// oracle harness. Production value of c0 is 0.5.
double fundsol_with_constant(const SpacetimePoint& pt, const ZenerParams& p,
                             const QuadratureConfig& cfg, double c0);
}  // namespace detail

}  // namespace fundsol
}  // namespace fzwave
