#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "vbound/cesaro.hpp"
#include "vbound/hardy.hpp"

using namespace vbound::cesaro;

namespace {
const std::complex<double> kI(0.0, 1.0);

ComplexFunction kernel(double t) {
    return [t](std::complex<double> z) {
        return vbound::hardy::kernel_eval(vbound::hardy::KernelFunction{t}, z);
    };
}
}  // namespace

TEST_CASE("gamma_param") {
    CHECK(gamma_param(2.0) == 0.0);
    CHECK(gamma_param(4.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_param(3.0) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_param(1.0), std::domain_error);
}

TEST_CASE("cesaro_apply_numeric reference values") {
    CHECK(std::abs(cesaro_apply_numeric(kernel(1.0), kI, 1e-12) - kI / 2.0) <= 1e-10);

    auto constant = [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
    CHECK(std::abs(cesaro_apply_numeric(constant, 1.0 + 2.0 * kI, 1e-12) - 1.0) <= 1e-11);

    auto identity = [](std::complex<double> z) { return z; };
    CHECK(std::abs(cesaro_apply_numeric(identity, 2.0, 1e-12) - 1.0) <= 1e-11);
}

TEST_CASE("cesaro_apply_numeric near the origin") {
    const auto f = kernel(1.0);
    CHECK(cesaro_apply_numeric(f, 0.0, 1e-12) == f(0.0));
    // below the small-|z| threshold the trapezoid limit value is used
    CHECK(std::abs(cesaro_apply_numeric(f, 1e-9 * kI, 1e-12) - kI) <= 1e-8);
    CHECK_THROWS_AS(cesaro_apply_numeric(f, -kI, 1e-12), std::domain_error);
}

TEST_CASE("cesaro_kernel_closed") {
    CHECK(std::abs(cesaro_kernel_closed(1.0, kI) - kI / 2.0) <= 1e-15);
    CHECK(std::abs(cesaro_kernel_closed(1.0, 0.0) - kI) <= 1e-15);
    CHECK(std::abs(cesaro_kernel_closed(2.0, 1.0) -
                   std::complex<double>(-0.2, 0.4)) <= 1e-15);
}

TEST_CASE("v_apply reference values") {
    CHECK(std::abs(v_apply(kernel(1.0), 2.0, kI, 1e-12) - kI / 4.0) <= 1e-10);

    auto constant = [](std::complex<double>) { return std::complex<double>(1.0, 0.0); };
    CHECK(std::abs(v_apply(constant, 2.0, 0.5 + kI, 1e-12)) <= 1e-11);

    CHECK(std::abs(v_apply(kernel(1.0), 3.0, 0.0, 1e-12) - kI / 3.0) <= 1e-10);
}

TEST_CASE("v_kernel_closed sign fixed by the expansion identity") {
    // (2(p-1)/p)/(-it-z) - (-it)/(-it-z)^2 must equal the closed form
    for (double t : {0.5, 1.0, 2.0}) {
        for (double p : {1.5, 2.0, 3.0}) {
            for (std::complex<double> z : {kI, 1.0 + kI, -2.0 + 0.5 * kI, 5.0 * kI}) {
                const std::complex<double> d = -kI * t - z;
                const std::complex<double> expanded =
                    (2.0 * (p - 1.0) / p) / d - (-kI * t) / (d * d);
                CHECK(std::abs(expanded - v_kernel_closed(t, p, z)) <= 1e-14);
            }
        }
    }
    // spot values
    CHECK(std::abs(v_kernel_closed(1.0, 3.0, 0.0) - kI / 3.0) <= 1e-15);
    CHECK(std::abs(v_kernel_closed(1.0, 2.0, kI) - kI / 4.0) <= 1e-15);
}

TEST_CASE("numeric and closed forms agree on a grid") {
    for (double t : {0.5, 2.0}) {
        const auto f = kernel(t);
        for (std::complex<double> z : {kI, 1.0 + kI, 0.01 * kI}) {
            CHECK(std::abs(cesaro_apply_numeric(f, z, 1e-12) -
                           cesaro_kernel_closed(t, z)) <= 1e-9);
            for (double p : {1.5, 3.0})
                CHECK(std::abs(v_apply(f, p, z, 1e-12) - v_kernel_closed(t, p, z)) <= 1e-9);
        }
    }
}

TEST_CASE("the averaging operator is linear") {
    const auto f = kernel(0.5);
    const auto g = kernel(2.0);
    const std::complex<double> alpha(0.7, -0.2), beta(-1.1, 0.4);
    auto combined = [&](std::complex<double> z) { return alpha * f(z) + beta * g(z); };
    for (std::complex<double> z : {kI, 2.0 + 0.5 * kI}) {
        const auto lhs = cesaro_apply_numeric(combined, z, 1e-11);
        const auto rhs = alpha * cesaro_apply_numeric(f, z, 1e-11) +
                         beta * cesaro_apply_numeric(g, z, 1e-11);
        CHECK(std::abs(lhs - rhs) <= 2e-11);
    }
}

TEST_CASE("spectrum circle geometry") {
    const auto at_two = spectrum_circle(2.0);
    CHECK(at_two.center == doctest::Approx(1.0));
    CHECK(at_two.radius == doctest::Approx(1.0));
    const auto at_three = spectrum_circle(3.0);
    CHECK(at_three.center == doctest::Approx(0.75));
    CHECK(at_three.radius == doctest::Approx(0.75));

    for (double p : {1.2, 2.0, 5.0}) {
        const auto circle = spectrum_circle(p);
        for (int k = 0; k < 64; ++k) {
            const double theta = 2.0 * 3.14159265358979323846 * k / 64.0;
            const std::complex<double> w =
                circle.center + circle.radius * std::exp(kI * theta);
            CHECK(std::abs(std::abs(spectrum_to_unit(p, w)) - 1.0) <= 1e-12);
        }
    }
}
