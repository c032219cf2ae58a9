#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace vbound::hardy {

// The test kernel f_t(z) = -it / (-it - z)^2 with its pole at -it, below
// the real axis.
struct KernelFunction {
    double t;
};

// Finite linear combination sum_i c_i f_{t_i}.
struct KernelCombination {
    std::vector<std::pair<std::complex<double>, double>> terms;  // (coefficient, t)
};

enum class NormMethod { closed_form, quadrature };

struct NormEstimate {
    double value;        // the p-norm itself
    double pth_power;    // value^p, the quantity the closed forms display
    double p;
    NormMethod method;
    double error_bound;  // absolute bound on `value`
};

std::complex<double> kernel_eval(const KernelFunction& k, std::complex<double> z);

std::complex<double> combination_eval(const KernelCombination& c, std::complex<double> z);

// ||f_t||_p^p = t^(1-p) * sqrt(pi) * Gamma(p - 1/2) / Gamma(p), evaluated
// in log space; returns the p-norm with pth_power alongside.
NormEstimate kernel_norm_closed(double t, double p);

// L^p norm of f restricted to the line Im z = y, by quadrature.
NormEstimate line_norm(const std::function<std::complex<double>(std::complex<double>)>& f,
                       double p, double y, double tol);

// Validates the combination invariants (nonempty, all t > 0, at least one
// nonzero coefficient); throws std::domain_error otherwise.
void validate(const KernelCombination& c);

}  // namespace vbound::hardy
