#pragma once

#include <stdexcept>

namespace vbound {

// Thrown when an iterative scheme (quadrature refinement, series
// truncation, search budget) cannot reach the requested tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vbound
