#include "vbound/phi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vbound/cesaro.hpp"
#include "vbound/hardy.hpp"
#include "vbound/quadrature.hpp"
#include "vbound/specfun.hpp"

namespace vbound::phi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLogPi = 0.57236494292470008707;
constexpr double kLog2 = 0.69314718055994530942;

void require_p(double p) {
    if (!std::isfinite(p) || p <= 1.0)
        throw std::domain_error("exponent p must lie in (1, inf)");
}

double log_phi_simplified(double p) {
    // Phi = (2/sqrt(pi)) (p-1)^(p-1) (2/p)^p Gamma((p+1)/2)^2 / Gamma(p-1/2)
    return kLog2 - kHalfLogPi + (p - 1.0) * std::log(p - 1.0) +
           p * (kLog2 - std::log(p)) +
           2.0 * specfun::log_gamma(0.5 * (p + 1.0)) -
           specfun::log_gamma(p - 0.5);
}

}  // namespace

PhiPoint phi_closed(double p) {
    require_p(p);
    if (p > 300.0) throw std::domain_error("phi_closed: p out of supported range");
    return {p, std::exp(log_phi_simplified(p)), std::nullopt, PhiMethod::gamma_simplified};
}

double phi_closed_raw(double p) {
    require_p(p);
    // Phi = 2 ((p-1)/p)^(p-1) Gamma((p+1)/2) Gamma(p) / (Gamma(p/2+1) Gamma(p-1/2))
    const double log_phi = kLog2 + (p - 1.0) * std::log((p - 1.0) / p) +
                           specfun::log_gamma(0.5 * (p + 1.0)) +
                           specfun::log_gamma(p) -
                           specfun::log_gamma(0.5 * p + 1.0) -
                           specfun::log_gamma(p - 0.5);
    return std::exp(log_phi);
}

PhiPoint phi_integral(double p, double tol) {
    require_p(p);
    if (!(tol > 0.0)) throw std::domain_error("phi_integral: tol must be positive");
    auto integrand = [p](double x) {
        // x/(x^2+1) = 1/x to machine precision once x^2 dominates
        const double base = x > 1e100 ? 1.0 / x : x / (x * x + 1.0);
        return std::pow(base, p);
    };
    const auto q = quadrature::integrate_half_line(integrand, 0.1 * tol);
    const double denom =
        std::exp(kHalfLogPi + specfun::log_gamma(p - 0.5) - specfun::log_gamma(p));
    const double prefactor = std::exp(p * std::log(2.0 * (p - 1.0) / p));
    return {p, prefactor * 2.0 * q.value / denom, std::nullopt, PhiMethod::integral};
}

double phi_log_derivative(double p, double tol) {
    require_p(p);
    return std::log(2.0 * (1.0 - 1.0 / p)) +
           specfun::digamma_diff(p - 0.5, 0.5 * (p + 1.0), tol).first;
}

SecondDerivativeCheck phi_second_derivative_check(double h) {
    if (!(h >= 1e-6 && h <= 1e-2))
        throw std::domain_error("phi_second_derivative_check: h must lie in [1e-6, 1e-2]");
    const double analytic = 0.5 * (5.0 - 0.5 * kPi * kPi);
    const double numeric =
        (phi_closed(2.0 + h).phi - 2.0 * phi_closed(2.0).phi + phi_closed(2.0 - h).phi) /
        (h * h);
    return {analytic, numeric};
}

double phi_second_derivative_series(double tol) {
    return 0.5 * (1.0 - specfun::shifted_inverse_square_sum(1.5, tol).first);
}

RatioPoint exact_ratio(double p, double t, double tol) {
    require_p(p);
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("exact_ratio: t must be finite and positive");
    if (!(tol > 0.0)) throw std::domain_error("exact_ratio: tol must be positive");

    // Both integrals scale like ||f_t||_p^p, so anchor the quadrature
    // tolerance there to keep the quotient accurate for extreme t.
    const double scale = hardy::kernel_norm_closed(t, p).pth_power;
    const double qtol = 0.1 * tol * scale;

    const double factor = 2.0 * (p - 1.0) / p;
    const double g = cesaro::gamma_param(p);
    auto numerator = [&](double x) {
        // |V f_t(x)| = factor * sqrt(x^2 + (gamma t)^2) / (x^2 + t^2),
        // rescaled by 1/|x| for large |x| so nothing overflows before
        // the quadrature tail cut.
        const double ax = std::abs(x);
        double m;
        if (ax > 1e100) {
            const double a = g * t / ax;
            const double b = t / ax;
            m = factor * std::sqrt(1.0 + a * a) / (ax * (1.0 + b * b));
        } else {
            m = factor * std::sqrt(x * x + g * g * t * t) / (x * x + t * t);
        }
        return std::pow(m, p);
    };
    auto denominator = [&](double x) { return std::pow(t / (x * x + t * t), p); };
    const auto num = quadrature::integrate_real_line(numerator, qtol);
    const auto den = quadrature::integrate_real_line(denominator, qtol);
    return {p, t, num.value / den.value};
}

std::vector<PhiPoint> phi_curve(double p_min, double p_max, int steps) {
    require_p(p_min);
    if (!(p_min < p_max)) throw std::domain_error("phi_curve: need p_min < p_max");
    if (steps < 2) throw std::domain_error("phi_curve: need steps >= 2");

    std::vector<PhiPoint> points;
    points.reserve(static_cast<std::size_t>(steps));
    const double step = (p_max - p_min) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double p = (i == steps - 1) ? p_max : p_min + step * i;
        PhiPoint point = phi_closed(p);
        point.phi_prime = (p < 1.001)
                              ? std::numeric_limits<double>::quiet_NaN()
                              : phi_log_derivative(p, 1e-12) * point.phi;
        points.push_back(point);
    }
    return points;
}

MonotonicityReport monotonicity_scan(double p_start, double p_end, int steps) {
    require_p(p_start);
    if (!(p_start < p_end)) throw std::domain_error("monotonicity_scan: need p_start < p_end");
    if (steps < 2) throw std::domain_error("monotonicity_scan: need steps >= 2");

    MonotonicityReport report{true, true, true, true};
    const double step = (p_end - p_start) / static_cast<double>(steps - 1);
    double previous = phi_closed(p_start).phi;
    for (int i = 1; i < steps; ++i) {
        const double p = (i == steps - 1) ? p_end : p_start + step * i;
        const double value = phi_closed(p).phi;
        if (!(value > previous)) report.strictly_increasing = false;
        if (!(value < previous)) report.strictly_decreasing = false;
        if (i < steps - 1) {
            const double ld = phi_log_derivative(p, 1e-10);
            if (!(ld > 0.0)) report.derivative_positive = false;
            if (!(ld < 0.0)) report.derivative_negative = false;
        }
        previous = value;
    }
    return report;
}

}  // namespace vbound::phi
