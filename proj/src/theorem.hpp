// The explicit mean-value theorem engine: the D1/D2 constants, the error
// integral E(y) with a certified analytic tail, and the assembled lower
// bound on (1/Y) integral_1^Y |A(x)| dx, generic over the input bundle.
#pragma once

#include "extreal.hpp"
#include "zeta_bounds.hpp"

namespace pintz {

struct TheoremParams {
    double c_A = 0.0; // pointwise bound |A(x)| <= c_A x^C
    double C = 0.0;
    GrowthBound F; // (c_F, B_F)
    GrowthBound G; // (c_G, B_G)
    double beta0 = 0.0;
    ExtReal gamma0;      // modulus is used; sign is ignored
    double c0 = 0.0;     // in (0, beta0)
    ExtReal F_rho0_abs;  // |F(rho0)|
    // Reading knob for the printed tail term: multiply by an extra
    // log(Y~) factor (off by default; kept for sensitivity analysis).
    bool tail_extra_log_factor = false;
};

// Throws InvalidParams on a violated hypothesis.
void validate_params(const TheoremParams& p);

// Mertens/zeta instantiation: c_A = 1, C = 1, growth bounds from the zeta
// module, |F(rho0)| from f_at_zero.
TheoremParams zeta_mertens_params(double beta0, const ExtReal& gamma0,
                                  double c0);

// D1(y) = c_G/(pi e) (1/2 + 1/((y-2)(y+1)^(B_G+2))); DomainError for y <= 2.
double d1(double y, double c_g, double b_g);
// D2 = c_G e/pi ((1 - 2^(-B_G-1/2))/(B_G+1) + 1/(1+beta0)).
double d2(double beta0, double c_g, double b_g);

struct CalEOptions {
    double rel_tol = 1e-12; // quadrature tolerance relative to the integral
    double T_override = 0;  // fixed truncation point (tests); 0 = automatic
};

struct CalEResult {
    ExtReal value;      // upper bound for E(y): tail and error bound included
    double integral;    // the two-sided t-integral (with tail), a plain double
    double abs_error;   // quadrature error bound on the t-integral
    double T;           // truncation point used
};

// E(y) at log y given as a double-double.  Requires log y > C + 2 and
// B_G + 2 - B_F > 1 (else TailDivergence).
CalEResult cal_e(DD log_y, const TheoremParams& p, const CalEOptions& opt = {});

// integrand of the t-integral at the given log y
double cal_e_integrand(double t, const TheoremParams& p, double log_y);
// one-sided analytic tail bound T^(B_F-B_G-2)/(B_G+2-B_F), valid for
// T >= max(1, 2 + beta0)
double cal_e_tail_bound(double T, const TheoremParams& p);

struct BoundBreakdown {
    ExtReal Ytilde;     // Y e^-(C+2)
    ExtReal main_term;  // |F(rho0)| Ytilde^beta0 / (beta0+2)^(B_G+2), rounded down
    ExtReal calE;       // E(Ytilde), rounded up
    ExtReal tail_term;  // c_A D1(log Ytilde) e^((C+1)(C+2)) / ((log Ytilde - C - 1) D2), rounded up
    ExtReal total;      // (main - calE)/(e^(C+2) (1+|gamma0|)^B_G D2) - tail
    double quadrature_abs_error = 0.0;
};

// The certified lower bound for (1/Y) integral_1^Y |A| dx.  Requires
// Y > e^(2C+4) strictly (YTooSmall otherwise).
BoundBreakdown lower_bound(const ExtReal& Y, const TheoremParams& p);

struct MeanLowerConstant {
    double c = 0.0;
    // sampling found total(Y)/Y^beta0 non-monotone and fell back to a
    // 64-point geometric grid minimum
    bool grid_fallback = false;
};

// c with lower_bound(Y).total >= c Y^beta0 for all Y >= Y0, via the ratio at
// Y0 plus a monotonicity check over {Y0, 2Y0, 10Y0, 100Y0, 1e6 Y0}.
MeanLowerConstant mean_lower_constant(const ExtReal& Y0,
                                      const TheoremParams& p);

} // namespace pintz
