#include "inference.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "mobius.hpp"

namespace pintz {

namespace {

void validate_query(const ExclusionQuery& q) {
    if (q.Y.sign <= 0 || !(q.Y.lnmag > DD(6.0)))
        throw YTooSmall("exclusion: requires Y > e^6 for the zeta/Mertens instance");
    if (!(q.d > 0.0)) throw DomainError("exclusion: d must be > 0");
    if (!(q.beta0 > 0.0) || q.beta0 > 1.0)
        throw DomainError("exclusion: beta0 must be in (0, 1]");
    if (!(q.c0 > 0.0) || !(q.c0 < q.beta0))
        throw DomainError("exclusion: c0 must be in (0, beta0)");
}

// ln(lower) - ln(upper-with-margin); nullopt when the lower bound is not
// positive (no exclusion possible)
std::optional<DD> margin_of(const ExclusionResult& r) {
    if (r.lower.sign <= 0) return std::nullopt;
    return r.lower.lnmag - margin_up(r.upper).lnmag;
}

ExclusionResult check_at(const ExtReal& Y, double d, double beta0,
                         const ExtReal& gamma0, double c0) {
    ExclusionResult out;
    out.c0_used = c0;
    out.upper = pointwise_upper_mean(d, Y);
    TheoremParams p = zeta_mertens_params(beta0, gamma0, c0);
    try {
        out.breakdown = lower_bound(Y, p);
    } catch (const CancellationUnderflow&) {
        // main term and E cancelled beyond certification; nothing to claim
        out.verdict = Verdict::Inconclusive;
        out.lower = ExtReal::zero();
        return out;
    }
    out.lower = out.breakdown.total;
    out.verdict = (ext_cmp(out.lower, margin_up(out.upper)) > 0)
                      ? Verdict::Excluded
                      : Verdict::Inconclusive;
    return out;
}

} // namespace

ExclusionResult exclusion_check(const ExclusionQuery& q) {
    validate_query(q);
    ExtReal g = ext_abs(q.gamma0);
    if (!q.optimize_c0) return check_at(q.Y, q.d, q.beta0, g, q.c0);

    // 16 interior grid points over (0.01, beta0 - 0.01)
    ExclusionResult best;
    std::optional<DD> best_margin;
    bool have = false;
    for (int i = 1; i <= 16; ++i) {
        double c0 = 0.01 + (q.beta0 - 0.02) * i / 17.0;
        if (!(c0 > 0.0) || !(c0 < q.beta0)) continue;
        ExclusionResult r = check_at(q.Y, q.d, q.beta0, g, c0);
        std::optional<DD> m = margin_of(r);
        bool better =
            !have || (m.has_value() && (!best_margin || *m > *best_margin));
        if (better) {
            best = r;
            best_margin = m;
            have = true;
        }
    }
    if (!have) throw DomainError("exclusion: no admissible c0 grid point");
    return best;
}

RegionResult exclusion_region_gamma(const ExtReal& Y, double d, double beta0,
                                    double c0, double tol_rel) {
    if (!(tol_rel > 0.0) || tol_rel > 0.1)
        throw DomainError("exclusion_region_gamma: tol_rel must be in (0, 0.1]");
    auto margin_at = [&](DD ln_g) {
        return margin_of(check_at(Y, d, beta0, ExtReal::from_ln(ln_g), c0));
    };
    auto excluded = [&](const std::optional<DD>& m) {
        return m.has_value() && m->hi > 0.0;
    };

    DD lo = dd_log(DD(14.0)); // below the first zero nothing is claimed
    DD hi = Y.lnmag;          // cap at gamma = Y
    if (!excluded(margin_at(lo)))
        throw NoExclusion(
            "exclusion_region_gamma: no exclusion even at gamma = 14");

    // monotonicity gate on a 64-point geometric grid
    const int n = 64;
    std::vector<std::optional<DD>> ms(n);
    bool monotone = true;
    for (int i = 0; i < n; ++i) {
        DD ln_g = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
        ms[static_cast<size_t>(i)] = margin_at(ln_g);
        if (i > 0) {
            const auto& prev = ms[static_cast<size_t>(i - 1)];
            const auto& cur = ms[static_cast<size_t>(i)];
            double pv = prev ? prev->hi : -1e308;
            double cv = cur ? cur->hi : -1e308;
            if (cv > pv + 1e-9) monotone = false;
        }
    }

    if (!monotone) {
        // grid scan: largest verified prefix, refined once
        int i = 0;
        while (i + 1 < n && excluded(ms[static_cast<size_t>(i + 1)])) ++i;
        DD a = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
        if (i + 1 >= n) return {ExtReal::from_ln(a), true};
        DD b = lo + (hi - lo) * (static_cast<double>(i + 1) / (n - 1));
        DD best = a;
        for (int j = 1; j <= n; ++j) {
            DD ln_g = a + (b - a) * (static_cast<double>(j) / n);
            if (!excluded(margin_at(ln_g))) break;
            best = ln_g;
        }
        return {ExtReal::from_ln(best), true};
    }

    if (excluded(ms[static_cast<size_t>(n - 1)]))
        return {ExtReal::from_ln(hi), false}; // excluded all the way to the cap

    // bisection on ln gamma
    for (int it = 0; it < 200; ++it) {
        DD mid = dd_mul_pwr2(lo + hi, 0.5);
        double width = (hi - lo).hi;
        if (width <= tol_rel * std::max(1.0, std::fabs(mid.hi))) break;
        if (excluded(margin_at(mid)))
            lo = mid;
        else
            hi = mid;
    }
    return {ExtReal::from_ln(lo), false};
}

BetaResult exclusion_region_beta(const ExtReal& Y, double d,
                                 const ExtReal& gamma0, double c0,
                                 double tol_abs) {
    if (!(tol_abs > 0.0) || tol_abs > 0.01)
        throw DomainError("exclusion_region_beta: tol_abs must be in (0, 0.01]");
    ExtReal g = ext_abs(gamma0);
    auto margin_at = [&](double beta) {
        return margin_of(check_at(Y, d, beta, g, c0));
    };
    auto excluded = [&](const std::optional<DD>& m) {
        return m.has_value() && m->hi > 0.0;
    };

    double lo = c0 + std::max(tol_abs, 1e-6); // beta0 ranges over (c0, 1]
    double hi = 1.0;
    if (!excluded(margin_at(hi)))
        throw NoExclusion("exclusion_region_beta: no exclusion even at beta0 = 1");

    // monotonicity gate on a 32-point grid
    const int n = 32;
    std::vector<std::optional<DD>> ms(n);
    bool monotone = true;
    for (int i = 0; i < n; ++i) {
        double b = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
        ms[static_cast<size_t>(i)] = margin_at(b);
        if (i > 0) {
            double pv = ms[static_cast<size_t>(i - 1)]
                            ? ms[static_cast<size_t>(i - 1)]->hi
                            : -1e308;
            double cv = ms[static_cast<size_t>(i)]
                            ? ms[static_cast<size_t>(i)]->hi
                            : -1e308;
            if (cv < pv - 1e-9) monotone = false;
        }
    }

    if (!monotone) {
        // scan from the top: smallest grid point with everything above excluded
        int i = n - 1;
        while (i - 1 >= 0 && excluded(ms[static_cast<size_t>(i - 1)])) --i;
        double beta = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
        return {beta, true};
    }

    if (excluded(ms[0])) return {lo, false};

    for (int it = 0; it < 200 && hi - lo > tol_abs; ++it) {
        double mid = 0.5 * (lo + hi);
        if (excluded(margin_at(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return {hi, false};
}

std::optional<ExtReal> pintz87_bound(const ExtReal& Y, double beta0,
                                     const ExtReal& gamma0) {
    if (!(beta0 > 0.5))
        throw DomainError("pintz87_bound: requires beta0 > 1/2 (off the half-line)");
    if (gamma0.sign <= 0)
        throw DomainError("pintz87_bound: requires gamma0 > 0");
    ExtReal g5 = ext_pow(gamma0, DD(5.0));
    if (ext_cmp(Y, g5) < 0) return std::nullopt;
    return ext_div(ext_pow(Y, DD(beta0)), g5);
}

} // namespace pintz
