#include "vbound/cesaro.hpp"

#include <cmath>
#include <stdexcept>

#include "vbound/quadrature.hpp"

namespace vbound::cesaro {

namespace {

void require_p(double p) {
    if (!std::isfinite(p) || p <= 1.0)
        throw std::domain_error("exponent p must lie in (1, inf)");
}

void require_t(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("kernel parameter t must be finite and positive");
}

void require_upper(std::complex<double> z) {
    if (z.imag() < 0.0)
        throw std::domain_error("z must lie in the closed upper half-plane");
}

constexpr double kSmallZ = 1e-8;

}  // namespace

double gamma_param(double p) {
    require_p(p);
    return (2.0 - p) / (2.0 * (p - 1.0));
}

std::complex<double> cesaro_apply_numeric(const ComplexFunction& f,
                                          std::complex<double> z, double tol) {
    require_upper(z);
    const double r = std::abs(z);
    if (r == 0.0) return f(0.0);
    if (r < kSmallZ) return 0.5 * (f(0.0) + f(z));
    const auto q = quadrature::integrate_segment(f, 0.0, z, tol * r);
    return q.value / z;
}

std::complex<double> cesaro_kernel_closed(double t, std::complex<double> z) {
    require_t(t);
    require_upper(z);
    return 1.0 / (std::complex<double>(0.0, -t) - z);
}

std::complex<double> v_apply(const ComplexFunction& f, double p,
                             std::complex<double> z, double tol) {
    require_p(p);
    return (2.0 * (p - 1.0) / p) * cesaro_apply_numeric(f, z, tol) - f(z);
}

std::complex<double> v_kernel_closed(double t, double p, std::complex<double> z) {
    require_t(t);
    require_p(p);
    require_upper(z);
    const double gamma = gamma_param(p);
    const std::complex<double> d = std::complex<double>(0.0, -t) - z;
    return (2.0 * (p - 1.0) / p) * (std::complex<double>(0.0, gamma * t) - z) / (d * d);
}

SpectrumCircle spectrum_circle(double p) {
    require_p(p);
    const double c = p / (2.0 * (p - 1.0));
    return {c, c};
}

std::complex<double> spectrum_to_unit(double p, std::complex<double> w) {
    require_p(p);
    return (2.0 * (p - 1.0) / p) * w - 1.0;
}

}  // namespace vbound::cesaro
