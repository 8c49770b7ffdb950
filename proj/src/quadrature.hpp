// Recursive adaptive Simpson with per-interval error estimates.  Fully
// deterministic: fixed splitting order, fixed-order error accumulation.
#pragma once

#include <functional>

namespace pintz {

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0; // accumulated |S2-S1|/15 estimates
    long evaluations = 0;
};

// Integrates f on [a, b] to absolute tolerance tol.  Throws
// QuadratureFailure if the budget (max depth / max evaluations) is hit on an
// interval still above its share of the tolerance.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth = 48,
                            long max_evals = 8'000'000);

} // namespace pintz
