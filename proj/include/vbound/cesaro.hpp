#pragma once

#include <complex>
#include <functional>

namespace vbound::cesaro {

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

// Spectrum of the averaging operator for a given p: the circle
// |w - center| = radius with center = radius = p / (2(p-1)).
struct SpectrumCircle {
    double center;
    double radius;
};

// gamma(p) = (2 - p) / (2(p - 1)); zero exactly at p = 2.
double gamma_param(double p);

// (Cf)(z) = (1/z) * integral of f over the straight segment [0, z].
// For |z| below 1e-8 the average degenerates numerically; the trapezoid
// value (f(0) + f(z))/2 realizes the limit with a first-order correction.
std::complex<double> cesaro_apply_numeric(const ComplexFunction& f,
                                          std::complex<double> z, double tol);

// (C f_t)(z) = 1 / (-it - z).
std::complex<double> cesaro_kernel_closed(double t, std::complex<double> z);

// (Vf)(z) = (2(p-1)/p) (Cf)(z) - f(z), numerically.
std::complex<double> v_apply(const ComplexFunction& f, double p,
                             std::complex<double> z, double tol);

// Closed form (V f_t)(z) = (2(p-1)/p) * (i gamma t - z) / (-it - z)^2.
// The sign of the i*gamma*t term follows from expanding the definition:
//   (2(p-1)/p)/(-it-z) - (-it)/(-it-z)^2 = (2(p-1)/p)(i gamma t - z)/(-it-z)^2.
std::complex<double> v_kernel_closed(double t, double p, std::complex<double> z);

SpectrumCircle spectrum_circle(double p);

// The affine map w -> (2(p-1)/p) w - 1 that carries spectrum_circle(p)
// onto the unit circle.
std::complex<double> spectrum_to_unit(double p, std::complex<double> w);

}  // namespace vbound::cesaro
