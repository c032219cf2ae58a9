#include "vbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "vbound/errors.hpp"

namespace vbound::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Beyond this the tanh-sinh weight is far below any requested tolerance.
constexpr double kAbscissaMax = 6.11;
constexpr double kWeightCutoff = 1e-280;
constexpr int kMaxLevels = 12;

// Hard stop for the x = 1/u fold. Integrands decaying as slowly as
// |x|^(-1.05) still carry ~1e-13 of mass out here, so the fold reaches
// almost to the overflow threshold; callers' integrands must tolerate
// |x| up to 1e290.
constexpr double kTailCut = 1e-290;

struct DeState {
    long evaluations = 0;
    long budget = 0;
};

void check_finite(double v) {
    if (!std::isfinite(v))
        throw std::runtime_error("quadrature: integrand returned a non-finite value");
}

// One tanh-sinh node pair at parameter t > 0 on (0,1):
//   u = (1 + tanh((pi/2) sinh t)) / 2, mirrored about 1/2.
// q is the distance of the left node from 0 (and of the right node
// from 1), computed without cancellation.
struct NodePair {
    double q;
    double weight;
};

NodePair de_node(double t) {
    const double w = 0.5 * kPi * std::sinh(t);
    const double q = 1.0 / (std::exp(2.0 * w) + 1.0);
    return {q, kPi * std::cosh(t) * q * (1.0 - q)};
}

// Nested-trapezoid tanh-sinh integration of g over (0,1). Integrable
// endpoint singularities at u = 0 are handled by the node clustering.
template <typename G>
double de01(G&& g, double tol, DeState& state, double& error_out) {
    auto eval = [&](double u) {
        if (state.evaluations >= state.budget)
            throw NonConvergence("quadrature: evaluation budget exhausted");
        ++state.evaluations;
        const double v = g(u);
        check_finite(v);
        return v;
    };

    // level 0, h = 1
    double sum = de_node(0.0).weight * eval(0.5);
    for (double t = 1.0; t <= kAbscissaMax; t += 1.0) {
        const NodePair n = de_node(t);
        if (n.weight < kWeightCutoff) break;
        sum += n.weight * (eval(n.q) + eval(1.0 - n.q));
    }
    double integral = sum;
    double previous = integral;
    double error = std::abs(integral);

    double h = 1.0;
    for (int level = 1; level <= kMaxLevels; ++level) {
        h *= 0.5;
        double fresh = 0.0;
        for (double t = h; t <= kAbscissaMax; t += 2.0 * h) {
            const NodePair n = de_node(t);
            if (n.weight < kWeightCutoff) break;
            fresh += n.weight * (eval(n.q) + eval(1.0 - n.q));
        }
        previous = integral;
        integral = 0.5 * integral + h * fresh;
        error = std::abs(integral - previous);
        if (level >= 3 && error <= tol * std::max(1.0, std::abs(integral))) {
            error_out = std::max(error, 4.0 * std::abs(integral) * 1e-16);
            return integral;
        }
    }
    throw NonConvergence("quadrature: tanh-sinh levels exhausted before tolerance");
}

QuadratureResult sum_pieces(const std::vector<std::function<double(double)>>& pieces,
                            double tol, long budget) {
    if (!(tol > 0.0)) throw std::domain_error("quadrature: tol must be positive");
    DeState state;
    state.budget = budget;
    const double piece_tol = tol / static_cast<double>(pieces.size());
    double value = 0.0;
    double error = 0.0;
    for (const auto& g : pieces) {
        double piece_error = 0.0;
        value += de01(g, piece_tol, state, piece_error);
        error += piece_error;
    }
    return {value, error, state.evaluations};
}

// Fold [1, inf) onto (0, 1] via x = 1/u.
std::function<double(double)> upper_tail(const std::function<double(double)>& f,
                                         double sign) {
    return [&f, sign](double u) {
        if (u < kTailCut) return 0.0;
        const double x = 1.0 / u;
        return f(sign * x) * x * x;
    };
}

// Gauss-Kronrod 7/15 on [-1,1] (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Panel {
    double s0;
    double s1;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     double tol, long budget) {
    return sum_pieces(
        {
            [&f](double u) { return f(u); },
            [&f](double u) { return f(-u); },
            upper_tail(f, 1.0),
            upper_tail(f, -1.0),
        },
        tol, budget);
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double tol, long budget) {
    return sum_pieces(
        {
            [&f](double u) { return f(u); },
            upper_tail(f, 1.0),
        },
        tol, budget);
}

ComplexQuadratureResult integrate_segment(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> start, std::complex<double> end, double tol,
    long budget) {
    if (!(tol > 0.0)) throw std::domain_error("quadrature: tol must be positive");
    const std::complex<double> dz = end - start;

    long evaluations = 0;
    auto rule = [&](double s0, double s1) {
        if (evaluations + 15 > budget)
            throw NonConvergence("integrate_segment: evaluation budget exhausted");
        const double mid = 0.5 * (s0 + s1);
        const double half = 0.5 * (s1 - s0);
        std::complex<double> kronrod = 0.0;
        std::complex<double> gauss = 0.0;
        for (int i = 0; i < 8; ++i) {
            const double offsets[2] = {-kXgk[i], kXgk[i]};
            const int count = (i == 7) ? 1 : 2;
            std::complex<double> pair_sum = 0.0;
            for (int j = 0; j < count; ++j) {
                const double s = mid + half * offsets[j];
                const std::complex<double> v = f(start + s * dz) * dz;
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw std::runtime_error(
                        "integrate_segment: integrand returned a non-finite value");
                pair_sum += v;
            }
            evaluations += count;
            kronrod += kWgk[i] * pair_sum;
            if (i % 2 == 1) gauss += kWg[i / 2] * pair_sum;
        }
        kronrod *= half;
        gauss *= half;
        return Panel{s0, s1, kronrod, std::abs(kronrod - gauss)};
    };

    std::priority_queue<Panel> panels;
    Panel whole = rule(0.0, 1.0);
    std::complex<double> total = whole.value;
    double total_error = whole.error;
    panels.push(whole);

    while (total_error > tol) {
        Panel worst = panels.top();
        panels.pop();
        if (worst.s1 - worst.s0 < 1e-14)
            throw NonConvergence("integrate_segment: panel width underflow");
        const double mid = 0.5 * (worst.s0 + worst.s1);
        Panel left = rule(worst.s0, mid);
        Panel right = rule(mid, worst.s1);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    return {total, total_error, std::max(evaluations, 15L)};
}

}  // namespace vbound::quadrature
