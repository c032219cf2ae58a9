#include "vbound/hardy.hpp"

#include <cmath>
#include <stdexcept>

#include "vbound/quadrature.hpp"
#include "vbound/specfun.hpp"

namespace vbound::hardy {

namespace {

constexpr double kHalfLogPi = 0.57236494292470008707;  // ln(pi)/2

void require_t(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::domain_error("kernel parameter t must be finite and positive");
}

void require_p(double p) {
    if (!std::isfinite(p) || p <= 1.0)
        throw std::domain_error("exponent p must lie in (1, inf)");
}

}  // namespace

std::complex<double> kernel_eval(const KernelFunction& k, std::complex<double> z) {
    require_t(k.t);
    // Pole sits at -it; refuse evaluation once z drops halfway toward it.
    if (z.imag() < -0.5 * k.t)
        throw std::domain_error("kernel_eval: z too close to the pole at -it");
    const std::complex<double> pole(0.0, -k.t);
    const std::complex<double> d = pole - z;
    return pole / (d * d);
}

std::complex<double> combination_eval(const KernelCombination& c, std::complex<double> z) {
    validate(c);
    std::complex<double> sum = 0.0;
    for (const auto& [coeff, t] : c.terms) sum += coeff * kernel_eval(KernelFunction{t}, z);
    return sum;
}

void validate(const KernelCombination& c) {
    if (c.terms.empty())
        throw std::domain_error("KernelCombination: at least one term required");
    bool any_nonzero = false;
    for (const auto& [coeff, t] : c.terms) {
        require_t(t);
        if (coeff != std::complex<double>(0.0, 0.0)) any_nonzero = true;
    }
    if (!any_nonzero)
        throw std::domain_error("KernelCombination: all coefficients are zero");
}

NormEstimate kernel_norm_closed(double t, double p) {
    require_t(t);
    require_p(p);
    const double log_pth_power = (1.0 - p) * std::log(t) + kHalfLogPi +
                                 specfun::log_gamma(p - 0.5) - specfun::log_gamma(p);
    const double value = std::exp(log_pth_power / p);
    return {value, std::exp(log_pth_power), p, NormMethod::closed_form, 1e-13 * value};
}

NormEstimate line_norm(const std::function<std::complex<double>(std::complex<double>)>& f,
                       double p, double y, double tol) {
    require_p(p);
    if (!(y >= 0.0)) throw std::domain_error("line_norm: y must be nonnegative");
    auto integrand = [&](double x) {
        return std::pow(std::abs(f(std::complex<double>(x, y))), p);
    };
    const auto q = quadrature::integrate_real_line(integrand, tol);
    const double value = std::pow(q.value, 1.0 / p);
    // d(value)/d(integral) = value / (p * integral)
    const double err = q.value > 0.0 ? q.error_estimate * value / (p * q.value) : q.error_estimate;
    return {value, q.value, p, NormMethod::quadrature, err};
}

}  // namespace vbound::hardy
