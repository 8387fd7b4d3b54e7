#include "fzwave/zener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fzwave/mittag_leffler.hpp"

namespace fzwave::zener {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_off_cut(Complex s) {
    if (s.imag() == 0.0 && s.real() <= 0.0)
        throw branch_cut_error("zener: s lies on the branch cut (-inf, 0]");
}

}  // namespace

Complex symbol(Complex s, const ZenerParams& p) {
    require_off_cut(s);
    const Complex sa = std::pow(s, p.alpha);
    return (1.0 + sa) / (1.0 + p.tau * sa);
}

Complex omega(Complex s, const ZenerParams& p) {
    require_off_cut(s);
    const Complex sa = std::pow(s, p.alpha);
    return s * s * (1.0 + p.tau * sa) / (1.0 + sa);
}

Complex omega_polar(double rho, double phi, const ZenerParams& p) {
    if (rho <= 0.0) throw std::invalid_argument("omega_polar: rho must be positive");
    if (std::abs(phi) >= kPi / 2.0)
        throw std::invalid_argument("omega_polar: |phi| must be below pi/2");
    const double ra = std::pow(rho, p.alpha);
    const double ca = std::cos(p.alpha * phi);
    const double sa = std::sin(p.alpha * phi);
    const double A = (1.0 + ra * ca) * (1.0 + ra * ca) + ra * ra * sa * sa;
    const double B = 1.0 + ra * (1.0 + p.tau) * ca + p.tau * ra * ra;
    const double C = ra * (1.0 - p.tau) * sa;
    const double c2 = std::cos(2.0 * phi);
    const double s2 = std::sin(2.0 * phi);
    const double scale = rho * rho / A;
    return Complex(scale * (B * c2 + C * s2), scale * (B * s2 - C * c2));
}

double sector_margin(const ZenerParams& p, std::size_t sample_count) {
    if (sample_count == 0) throw std::invalid_argument("sector_margin: need samples");
    const std::size_t m =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(sample_count)))));
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        // log-spaced radii over [1e-3, 1e3]
        const double lr = -3.0 + 6.0 * (m == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(m - 1));
        const double rho = std::pow(10.0, lr);
        for (std::size_t j = 0; j < m; ++j) {
            const double phi =
                (kPi / 2.0 - 1e-6) * (m == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(m - 1));
            const Complex w = omega_polar(rho, phi, p);
            const double dist = w.real() >= 0.0 ? std::abs(w) : std::abs(w.imag());
            margin = std::min(margin, dist);
        }
    }
    return margin;
}

double delta_weight(const ZenerParams& p) { return 1.0 / p.tau; }

double relaxation_kernel_regular(double t, const ZenerParams& p) {
    if (t <= 0.0) throw std::invalid_argument("relaxation_kernel_regular: t must be positive");
    if (p.alpha == 0.0)
        throw std::invalid_argument(
            "relaxation_kernel_regular: alpha = 0 degenerates to a pure delta; use the classical path");
    if (p.tau == 1.0) return 0.0;
    const double ta = std::pow(t, p.alpha);
    const double ml = special::mittag_leffler(p.alpha, p.alpha, -ta / p.tau);
    return (p.tau - 1.0) / (p.tau * p.tau) * std::pow(t, p.alpha - 1.0) * ml;
}

double classical_modulus(const ZenerParams& p) { return 2.0 / (1.0 + p.tau); }

double front_speed(const ZenerParams& p) { return 1.0 / std::sqrt(p.tau); }

}  // namespace fzwave::zener
