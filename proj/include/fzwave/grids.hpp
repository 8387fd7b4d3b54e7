#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fzwave {

using Field = std::vector<double>;

/// Uniform time lattice t_k = k*dt, k = 0..n_steps.
struct TimeGrid {
    double dt = 0.0;
    std::size_t n_steps = 0;

    TimeGrid() = default;
    TimeGrid(double dt_, std::size_t n_steps_) : dt(dt_), n_steps(n_steps_) {
        if (dt <= 0.0) throw std::invalid_argument("TimeGrid: dt must be positive");
    }

    std::size_t size() const { return n_steps + 1; }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    double horizon() const { return static_cast<double>(n_steps) * dt; }
};

/// Uniform spatial lattice x_k = x_min + k*dx, k = 0..n-1.
struct Grid1D {
    double x_min = 0.0;
    double dx = 0.0;
    std::size_t n = 0;

    Grid1D() = default;
    Grid1D(double x_min_, double dx_, std::size_t n_) : x_min(x_min_), dx(dx_), n(n_) {
        if (dx <= 0.0) throw std::invalid_argument("Grid1D: dx must be positive");
        if (n == 0) throw std::invalid_argument("Grid1D: need at least one node");
    }

    static Grid1D from_range(double x_min, double x_max, std::size_t n) {
        if (n < 2) throw std::invalid_argument("Grid1D: need at least two nodes for a range");
        return Grid1D(x_min, (x_max - x_min) / static_cast<double>(n - 1), n);
    }

    double x(std::size_t k) const { return x_min + static_cast<double>(k) * dx; }
    double x_max() const { return x(n - 1); }
};

}  // namespace fzwave
