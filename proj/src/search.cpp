#include "vbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "vbound/cesaro.hpp"

namespace vbound::search {

namespace {

void require_p(double p) {
    if (!std::isfinite(p) || p <= 1.0)
        throw std::domain_error("exponent p must lie in (1, inf)");
}

using Point = std::vector<double>;

struct NelderMeadOutcome {
    Point x;
    double fx;
    bool converged;
};

// Standard Nelder-Mead with reflection 1, expansion 2, contraction 1/2,
// shrink 1/2.
template <typename F>
NelderMeadOutcome nelder_mead(F&& objective, const Point& start, double step,
                              int max_iterations, double ftol) {
    const std::size_t dim = start.size();
    std::vector<Point> simplex(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) values[i] = objective(simplex[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<Point> s2(dim + 1);
        std::vector<double> v2(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            s2[i] = simplex[idx[i]];
            v2[i] = values[idx[i]];
        }
        simplex.swap(s2);
        values.swap(v2);
    };

    bool converged = false;
    for (int iter = 0; iter < max_iterations; ++iter) {
        order();
        if (std::abs(values[dim] - values[0]) <= ftol) {
            converged = true;
            break;
        }

        Point centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / dim;

        auto blend = [&](double coeff) {
            Point x(dim);
            for (std::size_t j = 0; j < dim; ++j)
                x[j] = centroid[j] + coeff * (centroid[j] - simplex[dim][j]);
            return x;
        };

        Point reflected = blend(1.0);
        const double fr = objective(reflected);
        if (fr < values[0]) {
            Point expanded = blend(2.0);
            const double fe = objective(expanded);
            if (fe < fr) {
                simplex[dim] = std::move(expanded);
                values[dim] = fe;
            } else {
                simplex[dim] = std::move(reflected);
                values[dim] = fr;
            }
        } else if (fr < values[dim - 1]) {
            simplex[dim] = std::move(reflected);
            values[dim] = fr;
        } else {
            Point contracted = blend(-0.5);
            const double fc = objective(contracted);
            if (fc < values[dim]) {
                simplex[dim] = std::move(contracted);
                values[dim] = fc;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j)
                        simplex[i][j] = 0.5 * (simplex[i][j] + simplex[0][j]);
                    values[i] = objective(simplex[i]);
                }
            }
        }
    }
    order();
    return {simplex[0], values[0], converged};
}

hardy::KernelCombination decode(const Point& x, int n_kernels) {
    hardy::KernelCombination combo;
    combo.terms.emplace_back(std::complex<double>(1.0, 0.0), std::exp(x[0]));
    for (int i = 1; i < n_kernels; ++i) {
        const std::size_t base = 1 + 3 * static_cast<std::size_t>(i - 1);
        combo.terms.emplace_back(std::complex<double>(x[base], x[base + 1]),
                                 std::exp(x[base + 2]));
    }
    return combo;
}

}  // namespace

double ratio_general(const hardy::KernelCombination& f, double p, double tol) {
    require_p(p);
    hardy::validate(f);

    auto eval_f = [&f](std::complex<double> z) { return hardy::combination_eval(f, z); };
    auto eval_vf = [&f, p](std::complex<double> z) {
        std::complex<double> sum = 0.0;
        for (const auto& [coeff, t] : f.terms)
            sum += coeff * cesaro::v_kernel_closed(t, p, z);
        return sum;
    };

    const double denom = hardy::line_norm(eval_f, p, 0.0, tol).value;
    if (denom < 1e-12)
        throw std::domain_error("ratio_general: combination is numerically degenerate");
    return hardy::line_norm(eval_vf, p, 0.0, tol).value / denom;
}

RatioSearchResult maximize_ratio(double p, int n_kernels, const SearchConfig& config) {
    require_p(p);
    if (n_kernels < 1 || n_kernels > 8)
        throw std::domain_error("maximize_ratio: n_kernels must lie in [1, 8]");

    const std::size_t dim = 1 + 3 * static_cast<std::size_t>(n_kernels - 1);
    long evaluations = 0;

    auto objective = [&](const Point& x) {
        ++evaluations;
        try {
            return -ratio_general(decode(x, n_kernels), p, config.objective_tol);
        } catch (const std::exception&) {
            return 1e6;  // degenerate or non-integrable iterate; steer away
        }
    };

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> logt_dist(-1.5, 1.5);

    NelderMeadOutcome best{{}, 1e300, false};
    for (int restart = 0; restart < config.restarts; ++restart) {
        Point start(dim, 0.0);
        if (restart > 0) {
            start[0] = logt_dist(rng);
            for (int i = 1; i < n_kernels; ++i) {
                const std::size_t base = 1 + 3 * static_cast<std::size_t>(i - 1);
                start[base] = coeff_dist(rng);
                start[base + 1] = coeff_dist(rng);
                start[base + 2] = logt_dist(rng);
            }
        }
        // restart 0 keeps the single-kernel seed: c_1 = 1, t_1 = 1,
        // all other coefficients zero.
        NelderMeadOutcome outcome = nelder_mead(objective, start, 0.5,
                                                config.max_iterations,
                                                config.simplex_tol);
        if (outcome.fx < best.fx) best = std::move(outcome);
    }

    const hardy::KernelCombination winner = decode(best.x, n_kernels);
    return {p, ratio_general(winner, p, config.report_tol), winner, evaluations,
            best.converged};
}

}  // namespace vbound::search
