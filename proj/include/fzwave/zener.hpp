#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>

namespace fzwave {

using Complex = std::complex<double>;

/// Dimensionless material pair (alpha, tau) of the fractional Zener law.
/// tau = tau_sigma / tau_eps lies in (0, 1]; tau = 1 is the exact elastic
/// limit used by the oracles.
struct ZenerParams {
    double alpha;
    double tau;

    ZenerParams(double alpha_, double tau_) : alpha(alpha_), tau(tau_) {
        if (alpha < 0.0 || alpha >= 1.0)
            throw std::invalid_argument("ZenerParams: alpha must lie in [0,1)");
        if (tau <= 0.0 || tau > 1.0)
            throw std::invalid_argument("ZenerParams: tau must lie in (0,1]");
    }
};

struct branch_cut_error : std::domain_error {
    using std::domain_error::domain_error;
};

namespace zener {

/// Laplace symbol of the relaxation operator: (1+s^alpha)/(1+tau s^alpha),
/// principal branch. s on (-inf, 0] is rejected.
Complex symbol(Complex s, const ZenerParams& p);

/// omega(s) = s^2 (1+tau s^alpha)/(1+s^alpha) -- the reciprocal ratio of
/// the symbol, scaled by s^2.
Complex omega(Complex s, const ZenerParams& p);

/// omega on the open right half-plane in polar form s = rho e^{i phi},
/// |phi| < pi/2, via the explicit real/imaginary-part formulas.
Complex omega_polar(double rho, double phi, const ZenerParams& p);

/// Samples omega over a log-polar lattice of the right half-plane and
/// returns the minimum distance of omega(s) to the cut (-inf, 0].
/// A positive value numerically witnesses the sector property.
double sector_margin(const ZenerParams& p, std::size_t sample_count);

/// Weight of the delta component of the relaxation kernel L(t): 1/tau.
double delta_weight(const ZenerParams& p);

/// Regular part k(t) of L(t) = (1/tau) delta + k:
/// k(t) = (tau-1)/tau^2 * t^{alpha-1} E_{alpha,alpha}(-t^alpha / tau).
/// Nonpositive for tau <= 1; identically zero at tau = 1.
double relaxation_kernel_regular(double t, const ZenerParams& p);

/// Effective elastic modulus in the alpha -> 0 limit: 2/(1+tau).
double classical_modulus(const ZenerParams& p);

/// Dimensionless wave-front speed 1/sqrt(tau) (the support-cone slope).
double front_speed(const ZenerParams& p);

}  // namespace zener
}  // namespace fzwave
