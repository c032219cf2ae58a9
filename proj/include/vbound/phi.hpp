#pragma once

#include <optional>
#include <vector>

namespace vbound::phi {

enum class PhiMethod { gamma_closed, gamma_simplified, integral };

struct PhiPoint {
    double p;
    double phi;
    std::optional<double> phi_prime;
    PhiMethod method;
};

struct RatioPoint {
    double p;
    double t;
    double ratio_pth_power;  // ||V f_t||_p^p / ||f_t||_p^p
};

struct SecondDerivativeCheck {
    double analytic;  // (5 - pi^2/2) / 2
    double numeric;   // second central difference of phi at p = 2
};

struct MonotonicityReport {
    bool strictly_increasing;
    bool strictly_decreasing;
    bool derivative_positive;  // log-derivative > 0 at every interior grid point
    bool derivative_negative;
};

// Phi(p) from the simplified Gamma form, evaluated in log space.
PhiPoint phi_closed(double p);

// Phi(p) from the unsimplified Gamma form; cross-check for phi_closed.
double phi_closed_raw(double p);

// Phi(p) as a quotient of integrals, sharing no Gamma identities with the
// closed forms.
PhiPoint phi_integral(double p, double tol);

// Phi'(p)/Phi(p) = ln(2(1 - 1/p)) + psi((p+1)/2) - psi(p - 1/2), the
// digamma difference summed by series.
double phi_log_derivative(double p, double tol);

SecondDerivativeCheck phi_second_derivative_check(double h);

// Phi''(2) through the series sum_{n>=0} 1/(n + 3/2)^2 = pi^2/2 - 4.
double phi_second_derivative_series(double tol);

// ||V f_t||_p^p / ||f_t||_p^p by direct line quadrature of both norms;
// t-independent up to quadrature error.
RatioPoint exact_ratio(double p, double t, double tol);

// Uniform grid of PhiPoints, endpoints included, with the log-derivative
// scaled into phi_prime. For p < 1.001 the derivative column is a NaN
// sentinel (the log-derivative diverges there).
std::vector<PhiPoint> phi_curve(double p_min, double p_max, int steps);

MonotonicityReport monotonicity_scan(double p_start, double p_end, int steps);

}  // namespace vbound::phi
