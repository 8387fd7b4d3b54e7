#pragma once

#include <stdexcept>
#include <utility>

#include "fzwave/grids.hpp"
#include "fzwave/zener.hpp"

namespace fzwave {

/// Dimensional material data (SI). The relaxation times carry units of
/// s^alpha and must satisfy tau_eps > tau_sigma > 0.
struct PhysicalMaterial {
    double modulus;     // E, Pa
    double density;     // rho, kg/m^3
    double tau_sigma;   // s^alpha
    double tau_eps;     // s^alpha
    double alpha;

    PhysicalMaterial(double E, double rho, double tau_s, double tau_e, double a)
        : modulus(E), density(rho), tau_sigma(tau_s), tau_eps(tau_e), alpha(a) {
        if (E <= 0.0 || rho <= 0.0) throw std::invalid_argument("PhysicalMaterial: E, rho > 0");
        if (!(tau_e >= tau_s && tau_s > 0.0))
            throw std::invalid_argument("PhysicalMaterial: need tau_eps >= tau_sigma > 0");
        if (a < 0.0 || a >= 1.0) throw std::invalid_argument("PhysicalMaterial: alpha in [0,1)");
    }
};

/// Length/time scales X*, T* with (X*/T*)^2 rho/E = 1.
struct ScaleFactors {
    double x_star;  // m
    double t_star;  // s
};

namespace scaling {

/// T* = tau_eps^{1/alpha}, X* = T* sqrt(E/rho), tau = tau_sigma/tau_eps.
/// Requires alpha > 0 (the time scale is the alpha-th root of tau_eps);
/// with alpha = 0 work in dimensionless form directly.
std::pair<ZenerParams, ScaleFactors> nondimensionalize(const PhysicalMaterial& m);

/// Discrete witness of the derivative rescaling identity
/// D^alpha_{tbar} ybar(tbar) = (T*)^alpha D^alpha_t y(t): evaluates both
/// sides on independently resampled grids and returns the max deviation.
double scale_lemma_check(const Field& y, const TimeGrid& grid, double alpha, double t_star);

/// Wave-front speed sqrt(E/rho) sqrt(tau_eps/tau_sigma) in m/s, obtained by
/// redimensionalizing the support cone |x| < t/sqrt(tau).
double wave_front_speed(const PhysicalMaterial& m);

}  // namespace scaling
}  // namespace fzwave
