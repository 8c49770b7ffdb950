// Growth-bound constants for the Mertens/zeta instantiation: F(s) = s - 1
// and G(s) = s(s-1)zeta(s), with machine re-verification of every numeric
// inequality behind them and a heuristic zeta evaluator for spot checks.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "extreal.hpp"

namespace pintz {

struct GrowthBound {
    double c = 0.0;
    double B = 0.0;
    double halfplane_sigma_min = 0.0;
};

// |F(s)| <= sqrt(2) max(1,|t|) e^sigma for sigma >= 0
GrowthBound growth_bound_F();
// |G(s)| <= 13.38 max(1,|t|^{7/2}) e^{|sigma|} for sigma >= -1
GrowthBound growth_bound_G();

struct LemmaCheck {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    bool pass = false;
};

struct LemmaCheckReport {
    std::vector<LemmaCheck> checks;
    bool all_pass() const;
};

// Evaluates every numeric inequality used to justify the shipped constants.
// Failures are reported, never thrown.
LemmaCheckReport verify_lemma_chain();

// |rho0 - 1| = sqrt((beta0-1)^2 + gamma0^2), computed in log space so
// gamma0 as large as exp(1e16) is fine.
ExtReal f_at_zero(double beta0, const ExtReal& gamma0);

// Heuristic zeta via the alternating eta series with Euler-van Wijngaarden
// acceleration.  Valid for 0 < re <= 10, |im| <= 100, away from s = 1;
// ~13 significant digits, not certified.
std::complex<double> zeta_spot(std::complex<double> s);

// |G(s)| sampled directly for re >= 1/2 and through the functional-equation
// reflection otherwise; the s = 0 and s = 1 limits are special-cased.
double g_abs_sample(std::complex<double> s);

// Lanczos gamma (g = 7, 9 coefficients); exposed for the reflection tests.
std::complex<double> lanczos_gamma(std::complex<double> z);

} // namespace pintz
