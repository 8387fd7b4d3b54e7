#pragma once

#include <stdexcept>

namespace fzwave::special {

struct ml_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 1/Gamma(x), returning 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Mittag-Leffler function E_{a,b}(z) = sum_k z^k / Gamma(a k + b) for
/// real z and a > 0.
///
/// Evaluation strategy: power series for small |z|; for 0 < a < 1 and
/// |z| > 1 the spectral-function integral representation (plus the
/// exponential term when z > 0), which stays accurate deep into the
/// negative tail where the series cancels catastrophically. Parameter
/// combinations outside the accurate regimes raise ml_domain_error
/// rather than returning a degraded value.
double mittag_leffler(double a, double b, double z);

}  // namespace fzwave::special
