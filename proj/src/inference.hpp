// Inverts the mean-value theorem: from a verified pointwise bound
// |M(x)| <= d sqrt(x) on [1, Y], certifies zero-exclusion verdicts and
// region boundaries for simple zeta zeros.
#pragma once

#include <optional>

#include "theorem.hpp"

namespace pintz {

struct ExclusionQuery {
    ExtReal Y;
    double d = 1.0;
    double beta0 = 0.0;
    ExtReal gamma0;
    double c0 = 0.1;
    // grid-search c0 over (0.01, beta0-0.01) instead of using the fixed value
    bool optimize_c0 = false;
};

enum class Verdict { Excluded, Inconclusive };

struct ExclusionResult {
    Verdict verdict = Verdict::Inconclusive;
    ExtReal lower; // theorem lower bound on the mean
    ExtReal upper; // (2d/3) sqrt(Y)
    BoundBreakdown breakdown;
    double c0_used = 0.0;
};

// Excluded means no simple zeta zero with real part >= beta0 and
// |imaginary part| <= gamma0 is compatible with the pointwise bound the
// caller has verified.  The verdict applies to the (beta0, gamma0) point.
ExclusionResult exclusion_check(const ExclusionQuery& q);

struct RegionResult {
    ExtReal gamma_star;
    bool grid_fallback = false; // margin grid was non-monotone; prefix scan used
};

// Largest gamma* (to relative tolerance tol_rel on ln gamma*) with exclusion
// certified for every gamma0 <= gamma*.  Throws NoExclusion when even the
// gamma = 14 surrogate (below the first zero) fails.
RegionResult exclusion_region_gamma(const ExtReal& Y, double d, double beta0,
                                    double c0, double tol_rel);

struct BetaResult {
    double beta_star = 0.0;
    bool grid_fallback = false;
};

// Smallest beta* (to absolute tolerance tol_abs) with exclusion certified
// for every beta0 in [beta*, 1].  Throws NoExclusion when beta0 = 1 fails.
BetaResult exclusion_region_beta(const ExtReal& Y, double d,
                                 const ExtReal& gamma0, double c0,
                                 double tol_abs);

// The 1987 comparison bound Y^beta0/gamma0^5, available when Y >= gamma0^5;
// requires beta0 > 1/2 (zeros off the half-line).
std::optional<ExtReal> pintz87_bound(const ExtReal& Y, double beta0,
                                     const ExtReal& gamma0);

} // namespace pintz
