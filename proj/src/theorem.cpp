#include "theorem.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"

namespace pintz {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kE = 2.718281828459045235360287471352662;

} // namespace

void validate_params(const TheoremParams& p) {
    if (!(p.c_A > 0.0) || !(p.C > 0.0))
        throw InvalidParams("theorem: need c_A > 0 and C > 0");
    if (!(p.F.c > 0.0) || !(p.G.c > 0.0) || p.F.B < 0.0 || p.G.B < 0.0)
        throw InvalidParams("theorem: growth constants must be positive");
    if (!(p.beta0 > 0.0) || p.beta0 > 1.0)
        throw InvalidParams("theorem: beta0 must be in (0, 1]");
    if (!(p.c0 > 0.0) || !(p.c0 < p.beta0))
        throw InvalidParams("theorem: c0 must be in (0, beta0)");
    if (p.G.B < p.F.B)
        throw InvalidParams("theorem: the shipped tail bound needs B_G >= B_F");
}

TheoremParams zeta_mertens_params(double beta0, const ExtReal& gamma0,
                                  double c0) {
    TheoremParams p;
    p.c_A = 1.0;
    p.C = 1.0;
    p.F = growth_bound_F();
    p.G = growth_bound_G();
    p.beta0 = beta0;
    p.gamma0 = ext_abs(gamma0);
    p.c0 = c0;
    p.F_rho0_abs = f_at_zero(beta0, p.gamma0);
    validate_params(p);
    return p;
}

double d1(double y, double c_g, double b_g) {
    if (!(y > 2.0)) throw DomainError("d1: requires y > 2");
    return c_g / (kPi * kE) *
           (0.5 + 1.0 / ((y - 2.0) * std::pow(y + 1.0, b_g + 2.0)));
}

double d2(double beta0, double c_g, double b_g) {
    return c_g * kE / kPi *
           ((1.0 - std::pow(2.0, -b_g - 0.5)) / (b_g + 1.0) +
            1.0 / (1.0 + beta0));
}

double cal_e_integrand(double t, const TheoremParams& p, double log_y) {
    double gauss = std::exp(-t * t / log_y);
    double num = std::max(1.0, std::pow(std::fabs(t), p.F.B));
    double d1m = std::hypot(p.c0, t);
    double base = 2.0 + p.beta0 - p.c0;
    double d2m = std::pow(std::hypot(base, t), p.G.B + 2.0);
    return gauss * num / (d1m * d2m);
}

double cal_e_tail_bound(double T, const TheoremParams& p) {
    double expo = p.G.B + 2.0 - p.F.B;
    if (!(expo > 1.0))
        throw TailDivergence("cal_e: tail exponent B_G + 2 - B_F must exceed 1");
    if (!(T >= std::max(1.0, 2.0 + p.beta0)))
        throw DomainError("cal_e_tail_bound: T below max(1, 2 + beta0)");
    return std::pow(T, p.F.B - p.G.B - 2.0) / expo;
}

CalEResult cal_e(DD log_y, const TheoremParams& p, const CalEOptions& opt) {
    double expo = p.G.B + 2.0 - p.F.B;
    if (!(expo > 1.0))
        throw TailDivergence("cal_e: tail exponent B_G + 2 - B_F must exceed 1");
    validate_params(p);
    double lam = log_y.hi + log_y.lo;
    if (!(lam > p.C + 2.0))
        throw DomainError("cal_e: requires log y > C + 2");

    auto f = [&](double t) { return cal_e_integrand(t, p, lam); };

    // dyadic panels [0,1], [1,2], [2,4], ... keep the c0-narrow peak at the
    // origin resolved at every stage
    auto rough_panel = [&](double a, double b) {
        double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        return (b - a) / 12.0 *
               (f(a) + 4.0 * f(lm) + 2.0 * f(m) + 4.0 * f(rm) + f(b));
    };

    double T;
    double rough = 0.0;
    if (opt.T_override > 0) {
        T = opt.T_override;
        rough = rough_panel(0.0, 1.0);
        for (double a = 1.0; a < T; a *= 2.0)
            rough += rough_panel(a, std::min(2.0 * a, T));
    } else {
        T = 8.0;
        rough = rough_panel(0.0, 1.0) + rough_panel(1.0, 2.0) +
                rough_panel(2.0, 4.0) + rough_panel(4.0, 8.0);
        for (;;) {
            bool gauss_dead = std::exp(-T * T / lam) < 1e-30;
            bool tail_small = cal_e_tail_bound(T, p) < 1e-12 * rough;
            if (gauss_dead || tail_small) break;
            if (T >= 0x1p40)
                throw QuadratureFailure("cal_e: cannot truncate the integral");
            rough += rough_panel(T, 2.0 * T);
            T *= 2.0;
        }
    }

    // refine panel-by-panel with the tolerance split evenly
    int n_panels = 1;
    for (double a = 1.0; a < T; a *= 2.0) ++n_panels;
    double tol = std::max(opt.rel_tol * rough / n_panels, 1e-300);
    double integral = 0.0, err = 0.0;
    {
        QuadResult q = adaptive_simpson(f, 0.0, 1.0, tol);
        integral += q.value;
        err += q.error_bound;
    }
    for (double a = 1.0; a < T; a *= 2.0) {
        QuadResult q = adaptive_simpson(f, a, std::min(2.0 * a, T), tol);
        integral += q.value;
        err += q.error_bound;
    }

    double tail = cal_e_tail_bound(T, p);
    // even integrand: double everything; rounding direction is up
    double two_sided = 2.0 * (integral + err + tail);

    // E(y) = c_F e^(beta0-c0)/(2 pi) e^(4/log y) y^(beta0-c0) * integral
    DD ln_pref = dd_log(DD(p.F.c)) + (DD(p.beta0) - DD(p.c0)) -
                 dd_log(DD(2.0) * DD_PI);
    DD ln_value = ln_pref + DD(4.0) / log_y +
                  (DD(p.beta0) - DD(p.c0)) * log_y + dd_log(DD(two_sided));

    CalEResult out;
    out.value = ExtReal::from_ln(ln_value);
    out.integral = 2.0 * (integral + tail);
    out.abs_error = 2.0 * err;
    out.T = T;
    return out;
}

BoundBreakdown lower_bound(const ExtReal& Y, const TheoremParams& p_in) {
    TheoremParams p = p_in;
    p.gamma0 = ext_abs(p_in.gamma0); // only |gamma0| enters
    validate_params(p);
    if (Y.sign <= 0 || !(Y.lnmag > DD(2.0 * p.C + 4.0)))
        throw YTooSmall("lower_bound: requires Y > e^(2C+4)");

    BoundBreakdown out;
    DD lam = Y.lnmag - (DD(p.C) + 2.0); // log Ytilde
    out.Ytilde = ExtReal::from_ln(lam);

    // main term, rounded down
    ExtReal denom_pow =
        ext_from_double(std::pow(p.beta0 + 2.0, p.G.B + 2.0));
    ExtReal main_raw = ext_div(
        ext_mul(ext_abs(p.F_rho0_abs), ext_pow(out.Ytilde, DD(p.beta0))),
        denom_pow);
    out.main_term = margin_down(main_raw);

    // E(Ytilde), rounded up
    CalEResult ce = cal_e(lam, p);
    out.calE = margin_up(ce.value);
    out.quadrature_abs_error = ce.abs_error;

    double lam_d = lam.hi + lam.lo;
    double d1v = d1(lam_d, p.G.c, p.G.B);
    double d2v = d2(p.beta0, p.G.c, p.G.B);

    // tail term (the D2 division included), rounded up
    ExtReal tail_raw = ext_mul(ext_from_double(p.c_A), ext_from_double(d1v));
    tail_raw = ext_mul(tail_raw,
                       ExtReal::from_ln(DD((p.C + 1.0) * (p.C + 2.0))));
    tail_raw = ext_div(tail_raw, ext_from_dd(lam - (DD(p.C) + 1.0)));
    tail_raw = ext_div(tail_raw, ext_from_double(d2v));
    if (p.tail_extra_log_factor) tail_raw = ext_mul(tail_raw, ext_from_dd(lam));
    out.tail_term = margin_up(tail_raw);

    // denominator e^(C+2) (1 + |gamma0|)^B_G D2
    ExtReal one_plus_g = ext_add(ExtReal::one(), p.gamma0);
    ExtReal denom = ext_mul(
        ext_mul(ExtReal::from_ln(DD(p.C) + 2.0), ext_pow(one_plus_g, DD(p.G.B))),
        ext_from_double(d2v));

    ExtReal num = ext_add(out.main_term, ext_neg(out.calE));
    out.total = ext_add(ext_div(num, denom), ext_neg(out.tail_term));
    return out;
}

MeanLowerConstant mean_lower_constant(const ExtReal& Y0,
                                      const TheoremParams& p) {
    auto ratio_at = [&](const ExtReal& Y) {
        BoundBreakdown bb = lower_bound(Y, p);
        return ext_div(bb.total, ext_pow(Y, DD(p.beta0)));
    };

    ExtReal r0 = ratio_at(Y0);
    static const double kFactors[] = {2.0, 10.0, 100.0, 1e6};
    bool monotone = true;
    for (double f : kFactors) {
        ExtReal rf = ratio_at(ext_mul(Y0, ext_from_double(f)));
        if (ext_cmp(rf, r0) < 0) {
            monotone = false;
            break;
        }
    }
    if (monotone) return {ext_to_double(r0), false};

    // fall back to the minimum over a refining geometric grid on [Y0, 1e6 Y0]
    ExtReal best = r0;
    const int n = 64;
    DD span = dd_log(DD(1e6));
    for (int i = 1; i <= n; ++i) {
        DD ln_y = Y0.lnmag + span * (static_cast<double>(i) / n);
        ExtReal r = ratio_at(ExtReal::from_ln(ln_y));
        if (ext_cmp(r, best) < 0) best = r;
    }
    return {ext_to_double(best), true};
}

} // namespace pintz
