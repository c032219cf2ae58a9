#pragma once

#include <cstdint>

#include "vbound/hardy.hpp"

namespace vbound::search {

struct SearchConfig {
    std::uint64_t seed = 42;
    int restarts = 6;
    int max_iterations = 300;     // per restart
    double simplex_tol = 1e-9;    // spread of objective values at convergence
    double objective_tol = 1e-7;  // quadrature tolerance inside the search
    double report_tol = 1e-9;     // re-evaluation tolerance for the best point
};

struct RatioSearchResult {
    double p;
    double best_ratio;  // norm ratio, not its p-th power
    hardy::KernelCombination parameters;
    long evaluations;   // objective evaluations across all restarts
    bool converged;
};

// ||Vf||_p / ||f||_p on the boundary line, with Vf assembled from the
// per-kernel closed forms.
double ratio_general(const hardy::KernelCombination& f, double p, double tol);

// Derivative-free maximization of ratio_general over n_kernels kernels.
// The first coefficient is pinned to 1 (scale and phase gauge); the
// remaining parameters are Re c_i, Im c_i and ln t_i. Deterministic for a
// fixed seed and budget.
RatioSearchResult maximize_ratio(double p, int n_kernels, const SearchConfig& config = {});

}  // namespace vbound::search
