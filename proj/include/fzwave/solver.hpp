#pragma once

#include <optional>
#include <vector>

#include "fzwave/fundsol.hpp"
#include "fzwave/grids.hpp"
#include "fzwave/zener.hpp"

namespace fzwave::solver {

/// Initial displacement, initial velocity, and optional body force sampled
/// on the grid (force rows indexed by the force time grid). Fields are
/// zero-extended outside the grid.
struct CauchyData {
    Field u0;
    Field v0;
    std::optional<std::vector<Field>> force;  // force[m][j] = f(x_j, t_m)
    std::optional<TimeGrid> force_time;
};

struct SolveOptions {
    QuadratureConfig quadrature{};
    /// Require the grid to contain the data support dilated by the cone
    /// speed. Disable when the attenuated far field is deliberately cropped.
    bool check_cone_coverage = true;
};

/// u(x, t_i) = (dS/dt(., t) *x u0) + (S(., t) *x v0) + (S *x,t f), by
/// trapezoidal convolution sums on the grid. Output rows follow `times`.
std::vector<Field> solve(const CauchyData& data, const ZenerParams& p, const Grid1D& grid,
                         const std::vector<double>& times, const SolveOptions& opts = {});

/// Strain by central differences and stress by the relaxation-kernel time
/// convolution sigma = (1/tau) eps + k *t eps, from a displacement history
/// sampled on grid x TimeGrid.
struct StrainStress {
    std::vector<Field> strain;
    std::vector<Field> stress;
};
StrainStress recover_strain_stress(const std::vector<Field>& u, const Grid1D& grid,
                                   const TimeGrid& time, const ZenerParams& p);

}  // namespace fzwave::solver
