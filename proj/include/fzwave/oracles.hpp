#pragma once

#include <functional>
#include <vector>

#include "fzwave/fundsol.hpp"
#include "fzwave/grids.hpp"
#include "fzwave/zener.hpp"

namespace fzwave::oracles {

using LaplaceImage = std::function<Complex(Complex)>;

/// Trapezoidal Bromwich-line inversion with conjugate-symmetry folding and
/// Euler (binomial) acceleration of the oscillatory tail. The line Re s = a
/// must lie right of all singularities; h is the imaginary-axis step.
/// Throws if the sampled image fails to decay along the line.
double bromwich_invert(const LaplaceImage& F, double t, double a, double h,
                       std::size_t n_terms);

/// bromwich_invert with the step/offset choice h = pi/t, a = A/(2t) that
/// makes the tail alternate, which the Euler weights sum to near machine
/// accuracy for smooth images.
double bromwich_invert(const LaplaceImage& F, double t);

/// Fixed-Talbot inversion (Abate-Valko): a cotangent contour wrapped around
/// the negative real axis. Needs F analytic off (-inf, 0] and evaluable at
/// Re s < 0 away from the cut; converges much faster than the line rule for
/// images with algebraic decay.
double talbot_invert(const LaplaceImage& F, double t, std::size_t degree = 48);

/// Trapezoidal forward transform of a sampled signal: int_0^T y e^{-st} dt.
/// Flags a grid whose horizon leaves a non-negligible truncated tail.
Complex forward_laplace(const Field& samples, const TimeGrid& grid, Complex s);

/// Classical d'Alembert solution at one spacetime point from sampled
/// initial data (linear interpolation, zero extension off the grid).
double dalembert(const Field& u0, const Field& v0, const Grid1D& grid, double c,
                 const SpacetimePoint& pt);

struct FdtdResult {
    Grid1D grid;
    TimeGrid time;
    /// displacement[n][j] = u(x_j, t_n)
    std::vector<Field> displacement;
    /// stress[n][j] = sigma(x_{j+1/2}, t_n) on the staggered lattice
    std::vector<Field> stress;
};

/// Leapfrog discretization of the first-order system: displacement on
/// nodes, strain/stress on half-nodes, with the constitutive law solved
/// implicitly for sigma at each step (full-history GL memory sums).
/// Requires dt <= dx sqrt(tau) * safety (front speed 1/sqrt(tau)).
FdtdResult fdtd_solve(const Field& u0, const Field& v0, const Grid1D& grid,
                      const ZenerParams& p, double dt, std::size_t n_steps,
                      double cfl_safety = 0.95);

}  // namespace fzwave::oracles
