#pragma once

#include <complex>
#include <functional>

namespace vbound::quadrature {

struct QuadratureResult {
    double value;
    double error_estimate;   // conservative, from nested-rule differences
    long evaluations;
};

struct ComplexQuadratureResult {
    std::complex<double> value;
    double error_estimate;
    long evaluations;
};

inline constexpr long kDefaultBudget = 1'000'000;

// Integral of f over the whole real line. Tails are folded onto (0,1]
// with x -> 1/u and each finite piece is handled by nested tanh-sinh
// levels, so slowly decaying (algebraic) tails are fine.
QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double tol, long budget = kDefaultBudget);

// Integral of f over [0, inf).
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double tol, long budget = kDefaultBudget);

// Integral of f along the straight segment from start to end. Adaptive
// Gauss-Kronrod 7/15; the integrand must be smooth on the segment.
ComplexQuadratureResult integrate_segment(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> start, std::complex<double> end, double tol,
    long budget = kDefaultBudget);

}  // namespace vbound::quadrature
