#pragma once

#include <vector>

#include "fzwave/grids.hpp"

namespace fzwave::fraccalc {

/// Grunwald-Letnikov weights w_0..w_n, the coefficients of (1-z)^alpha.
/// Computed by the multiplicative recurrence w_k = w_{k-1}*(k-1-alpha)/k,
/// which stays finite where factorial forms overflow.
std::vector<double> gl_weights(double alpha, std::size_t n);

/// Discrete left Riemann-Liouville derivative of order alpha in [0,1)
/// on a uniform grid: dt^{-alpha} times the GL convolution of the samples.
/// First-order accurate for absolutely continuous inputs. alpha = 0 is
/// the identity.
Field rl_derivative(const Field& samples, const TimeGrid& grid, double alpha);

/// Discrete fractional integral of order alpha > 0 (GL weights of order
/// -alpha, scaled by dt^{alpha}); the inverse of rl_derivative up to O(dt).
Field rl_integral(const Field& samples, const TimeGrid& grid, double alpha);

/// Power kernel t^{alpha-1}/Gamma(alpha), alpha > 0, t > 0.
double f_alpha_kernel(double alpha, double t);

}  // namespace fzwave::fraccalc
