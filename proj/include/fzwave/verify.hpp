#pragma once

#include <string>
#include <vector>

#include "fzwave/zener.hpp"

namespace fzwave::verify {

struct CheckResult {
    std::string name;
    double measured;   // worst observed error / margin
    double threshold;  // pass bound
    bool passed;
};

struct VerifyOptions {
    double alpha = 0.23;
    double tau = 0.004;
    /// Leading constant of the fundamental-solution formula; overridable so
    /// the harness can demonstrate that a wrong value fails loudly.
    double leading_constant = 0.5;
    /// Scale of the FDTD cross-check (n x n); the acceptance suite uses 400.
    std::size_t fdtd_resolution = 200;
};

/// Runs the oracle suite: Laplace-inversion basics, Mittag-Leffler
/// identities, sector sampling, kernel forward-transform, Bromwich vs
/// real-axis quadrature, Laplace round-trip, classical limits, and the
/// FDTD/convolution cross-check.
std::vector<CheckResult> run_suite(const VerifyOptions& opts = {});

/// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fzwave::verify
