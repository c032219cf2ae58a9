#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "vbound/errors.hpp"
#include "vbound/quadrature.hpp"

using namespace vbound::quadrature;
using vbound::NonConvergence;

namespace {
constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);

// Beta-function oracle: int_0^inf x^(2a-1) / (1+x^2)^(a+b) dx = B(a,b)/2
double half_beta(double a, double b) {
    return 0.5 * std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}
}  // namespace

TEST_CASE("real-line corpus") {
    const double tol = 1e-10;
    struct Case {
        double (*f)(double);
        double exact;
    };
    const Case cases[] = {
        {[](double x) { return 1.0 / (x * x + 1.0); }, kPi},
        {[](double x) { return std::exp(-x * x); }, std::sqrt(kPi)},
        // oracle sqrt(pi) Gamma(5/2)/Gamma(3) = 3 pi / 8
        {[](double x) { return std::pow(x * x + 1.0, -3.0); },
         std::exp(0.5 * std::log(kPi) + std::lgamma(2.5) - std::lgamma(3.0))},
    };
    for (const auto& c : cases) {
        const auto r = integrate_real_line(c.f, tol);
        CHECK(std::abs(r.value - c.exact) <= std::max(tol, r.error_estimate));
        CHECK(r.error_estimate >= 0.0);
        CHECK(r.evaluations > 0);
    }
    // frozen value for the third case
    CHECK(integrate_real_line(cases[2].f, tol).value ==
          doctest::Approx(1.1780972450961724644).epsilon(1e-10));
}

TEST_CASE("half-line corpus") {
    const double tol = 1e-10;
    const auto a = integrate_half_line(
        [](double x) { return std::pow(x / (x * x + 1.0), 2.0); }, tol);
    CHECK(std::abs(a.value - half_beta(1.5, 0.5)) <= std::max(tol, a.error_estimate));
    CHECK(a.value == doctest::Approx(kPi / 4.0).epsilon(1e-10));

    const auto b = integrate_half_line([](double x) { return std::exp(-x); }, tol);
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-10));

    const auto c = integrate_half_line(
        [](double x) { return std::pow(x / (x * x + 1.0), 3.0); }, tol);
    CHECK(std::abs(c.value - half_beta(2.0, 1.0)) <= std::max(tol, c.error_estimate));
    CHECK(c.value == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("linearity") {
    const double tol = 1e-10;
    auto f = [](double x) { return 1.0 / (x * x + 1.0); };
    auto g = [](double x) { return std::exp(-x * x); };
    auto combined = [&](double x) { return 2.0 * f(x) - 3.0 * g(x); };
    const double lhs = integrate_real_line(combined, tol).value;
    const double rhs =
        2.0 * integrate_real_line(f, tol).value - 3.0 * integrate_real_line(g, tol).value;
    CHECK(std::abs(lhs - rhs) <= 2.0 * tol);
}

TEST_CASE("even integrands: whole line is twice the half line") {
    const double tol = 1e-10;
    auto f = [](double x) { return 1.0 / std::pow(x * x + 1.0, 1.7); };
    CHECK(std::abs(integrate_real_line(f, tol).value -
                   2.0 * integrate_half_line(f, tol).value) <= 2.0 * tol);
}

TEST_CASE("t-scaling substitution") {
    const double tol = 1e-10;
    for (double p : {1.5, 2.0, 3.0}) {
        const double unit =
            integrate_real_line([p](double x) { return std::pow(x * x + 1.0, -p); }, tol)
                .value;
        for (double t : {0.5, 1.0, 2.0}) {
            const double scaled =
                integrate_real_line(
                    [p, t](double x) { return std::pow(x * x + t * t, -p); }, tol)
                    .value;
            CHECK(std::abs(scaled - std::pow(t, 1.0 - 2.0 * p) * unit) <= 2.0 * tol);
        }
    }
}

TEST_CASE("non-finite integrand values are rejected") {
    auto bad = [](double x) {
        return x == 0.5 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    };
    CHECK_THROWS_AS(integrate_real_line(bad, 1e-8), std::runtime_error);
}

TEST_CASE("unreachable tolerance raises NonConvergence") {
    auto f = [](double x) { return 1.0 / (x * x + 1.0); };
    CHECK_THROWS_AS(integrate_real_line(f, 1e-8, 50), NonConvergence);
}

TEST_CASE("segment: constants and polynomials") {
    auto one = [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
    const auto a = integrate_segment(one, 0.0, kI, 1e-12);
    CHECK(std::abs(a.value - kI) <= 1e-12);

    auto identity = [](std::complex<double> z) { return z; };
    const std::complex<double> z0 = 1.0 + 2.0 * kI;
    const auto b = integrate_segment(identity, 0.0, z0, 1e-12);
    CHECK(std::abs(b.value - z0 * z0 * 0.5) <= 1e-12);  // (-3+4i)/2
    CHECK(b.value.real() == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(b.value.imag() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("segment: kernel antiderivative oracle") {
    // f_1(zeta) = -i/(-i-zeta)^2 has antiderivative -i/(-i-zeta);
    // over [0, i] the integral is -1/2.
    auto f = [](std::complex<double> zeta) {
        const std::complex<double> d = -kI - zeta;
        return -kI / (d * d);
    };
    const auto r = integrate_segment(f, 0.0, kI, 1e-12);
    CHECK(std::abs(r.value - std::complex<double>(-0.5, 0.0)) <= 1e-11);
}

TEST_CASE("segment reversal negates the value") {
    auto f = [](std::complex<double> z) { return std::exp(z); };
    const std::complex<double> z0 = 0.3 + 1.7 * kI;
    const auto fwd = integrate_segment(f, 0.0, z0, 1e-12);
    const auto rev = integrate_segment(f, z0, 0.0, 1e-12);
    CHECK(std::abs(fwd.value + rev.value) <= 1e-14);
}

TEST_CASE("segment: coincident endpoints give exactly zero") {
    auto f = [](std::complex<double> z) { return std::exp(z); };
    const auto r = integrate_segment(f, kI, kI, 1e-12);
    CHECK(r.value == std::complex<double>(0.0, 0.0));
}

TEST_CASE("segment budget exhaustion") {
    auto wiggly = [](std::complex<double> z) { return std::cos(400.0 * z.real()); };
    CHECK_THROWS_AS(integrate_segment(wiggly, 0.0, 1.0, 1e-300, 500), NonConvergence);
}
