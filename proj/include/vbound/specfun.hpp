#pragma once

#include <cstdint>
#include <utility>

namespace vbound::specfun {

// Record of how a series was cut off: number of terms actually summed and
// an explicit absolute bound on the neglected remainder.
struct SeriesTruncation {
    std::int64_t terms_used;
    double tail_bound;
};

// ln Gamma(x) for x > 0. Lanczos approximation with a recurrence shift
// below x = 0.5. Relative accuracy ~1e-14 on [0.25, 200].
double log_gamma(double x);

// Gamma(a)/Gamma(b) via exp(log_gamma(a) - log_gamma(b)), a, b > 0.
double gamma_ratio(double a, double b);

// psi(b) - psi(a) through the series sum_{n>=0} (b-a)/((n+a)(n+b)),
// truncated with a midpoint-integral tail correction so that the reported
// tail_bound is a true bound and is <= tol. Antisymmetric in (a, b) by
// construction.
std::pair<double, SeriesTruncation> digamma_diff(double a, double b, double tol);

// Partial sum sum_{k=1..n_terms} 1/(2k-1)^2. Increases monotonically to
// pi^2/8.
double odd_square_sum(std::int64_t n_terms);

// sum_{n>=0} 1/(n+c)^2 for c > 0, truncated with a midpoint-corrected tail
// so the result is within tol of the exact sum.
std::pair<double, SeriesTruncation> shifted_inverse_square_sum(double c, double tol);

}  // namespace vbound::specfun
