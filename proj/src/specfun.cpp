#include "vbound/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vbound/errors.hpp"

namespace vbound::specfun {

namespace {

// Lanczos coefficients, g = 7, 9 terms (Godfrey). Gives ~15 correct
// digits for arguments >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

double log_gamma_core(double x) {
    // valid for x >= 0.5
    double series = kLanczos[0];
    for (int i = 1; i < 9; ++i) series += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(series);
}

void require_positive(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0.0) throw std::domain_error(what);
}

constexpr std::int64_t kMaxSeriesTerms = 100'000'000;

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma: argument must be finite and positive");
    if (x < 0.5) return log_gamma_core(x + 1.0) - std::log(x);
    return log_gamma_core(x);
}

double gamma_ratio(double a, double b) {
    require_positive(a, "gamma_ratio: arguments must be finite and positive");
    require_positive(b, "gamma_ratio: arguments must be finite and positive");
    return std::exp(log_gamma(a) - log_gamma(b));
}

std::pair<double, SeriesTruncation> digamma_diff(double a, double b, double tol) {
    require_positive(a, "digamma_diff: arguments must be finite and positive");
    require_positive(b, "digamma_diff: arguments must be finite and positive");
    if (!(tol > 0.0)) throw std::domain_error("digamma_diff: tol must be positive");
    if (a == b) return {0.0, SeriesTruncation{1, 0.0}};
    if (a > b) {
        auto [value, trunc] = digamma_diff(b, a, tol);
        return {-value, trunc};
    }

    // After N terms the remainder is replaced by the midpoint integral
    // int_{N-1/2}^inf (1/(x+a) - 1/(x+b)) dx. The difference between the
    // remainder and that integral is bounded by |f'(N-1/2)|/24 because
    // f'' = 2/(x+a)^3 - 2/(x+b)^3 keeps one sign for a < b.
    auto tail_bound = [&](double n) {
        const double u = n - 0.5 + a;
        const double v = n - 0.5 + b;
        return std::abs(1.0 / (u * u) - 1.0 / (v * v)) / 24.0;
    };

    std::int64_t n = 64;
    while (tail_bound(static_cast<double>(n)) > tol) {
        if (n >= kMaxSeriesTerms)
            throw NonConvergence("digamma_diff: tolerance unreachable within term cap");
        n *= 2;
    }

    double sum = 0.0;
    for (std::int64_t k = n - 1; k >= 0; --k)
        sum += (b - a) / ((static_cast<double>(k) + a) * (static_cast<double>(k) + b));
    const double nn = static_cast<double>(n);
    sum += std::log((nn - 0.5 + b) / (nn - 0.5 + a));
    return {sum, SeriesTruncation{n, tail_bound(nn)}};
}

double odd_square_sum(std::int64_t n_terms) {
    if (n_terms < 1) throw std::domain_error("odd_square_sum: n_terms must be >= 1");
    double sum = 0.0;
    for (std::int64_t k = n_terms; k >= 1; --k) {
        const double odd = 2.0 * static_cast<double>(k) - 1.0;
        sum += 1.0 / (odd * odd);
    }
    return sum;
}

std::pair<double, SeriesTruncation> shifted_inverse_square_sum(double c, double tol) {
    require_positive(c, "shifted_inverse_square_sum: c must be finite and positive");
    if (!(tol > 0.0)) throw std::domain_error("shifted_inverse_square_sum: tol must be positive");

    // Same midpoint-corrected truncation as digamma_diff, with
    // f(x) = 1/(x+c)^2 and tail integral 1/(N-1/2+c).
    auto tail_bound = [&](double n) {
        const double u = n - 0.5 + c;
        return 1.0 / (12.0 * u * u * u);
    };

    std::int64_t n = 64;
    while (tail_bound(static_cast<double>(n)) > tol) {
        if (n >= kMaxSeriesTerms)
            throw NonConvergence("shifted_inverse_square_sum: tolerance unreachable within term cap");
        n *= 2;
    }

    double sum = 0.0;
    for (std::int64_t k = n - 1; k >= 0; --k) {
        const double u = static_cast<double>(k) + c;
        sum += 1.0 / (u * u);
    }
    sum += 1.0 / (static_cast<double>(n) - 0.5 + c);
    return {sum, SeriesTruncation{n, tail_bound(static_cast<double>(n))}};
}

}  // namespace vbound::specfun
