#pragma once

#include <functional>
#include <stdexcept>

namespace fzwave::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
/// Bisects the worst panel until the global error estimate meets
/// max(abs_tol, rel_tol*|I|) or the subdivision budget is exhausted.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-14,
                 std::size_t max_subdivisions = 2000);

/// Same, but throws convergence_error instead of returning a poor estimate.
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-10, double abs_tol = 1e-14,
                         std::size_t max_subdivisions = 2000);

}  // namespace fzwave::quad
