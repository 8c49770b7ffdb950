// extern-C surface over the C++ core.  Exceptions are caught at the
// boundary and mapped to status codes; detail text is kept per thread.
#include "pintz/pintz.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "extreal.hpp"
#include "inference.hpp"
#include "mobius.hpp"
#include "theorem.hpp"
#include "zeta_bounds.hpp"

struct pintz_params {
    pintz::TheoremParams p;
};
struct pintz_scan {
    pintz::MertensScan s;
};
struct pintz_lemma_report {
    pintz::LemmaCheckReport r;
};

namespace {

thread_local std::string g_last_error;

template <class F>
pintz_status guarded(F&& f) noexcept {
    try {
        f();
        g_last_error.clear();
        return PINTZ_OK;
    } catch (const pintz::Error& e) {
        g_last_error = e.what();
        return e.status();
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PINTZ_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PINTZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PINTZ_ERR_INTERNAL;
    }
}

pintz::ExtReal from_c(pintz_extreal x) {
    return {static_cast<int>(x.sign), pintz::DD(x.ln_hi, x.ln_lo)};
}

pintz_extreal to_c(const pintz::ExtReal& x) {
    return {static_cast<int32_t>(x.sign), x.lnmag.hi, x.lnmag.lo};
}

pintz_breakdown to_c(const pintz::BoundBreakdown& b) {
    pintz_breakdown out;
    out.y_tilde = to_c(b.Ytilde);
    out.main_term = to_c(b.main_term);
    out.cal_e = to_c(b.calE);
    out.tail_term = to_c(b.tail_term);
    out.total = to_c(b.total);
    out.quadrature_abs_error = b.quadrature_abs_error;
    return out;
}

pintz_status copy_string(const std::string& s, char* buf, size_t buflen) {
    if (!buf || buflen < s.size() + 1) {
        g_last_error = "buffer too small (need " +
                       std::to_string(s.size() + 1) + " bytes)";
        return PINTZ_ERR_BUFFER;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return PINTZ_OK;
}

pintz_status require(bool ok, const char* what) {
    if (ok) return PINTZ_OK;
    g_last_error = what;
    return PINTZ_ERR_USAGE;
}

} // namespace

extern "C" {

const char* pintz_version(void) { return "0.1.0"; }

const char* pintz_status_name(pintz_status st) {
    switch (st) {
        case PINTZ_OK: return "ok";
        case PINTZ_ERR_USAGE: return "usage";
        case PINTZ_ERR_DOMAIN: return "domain";
        case PINTZ_ERR_INVALID_PARAMS: return "invalid_params";
        case PINTZ_ERR_Y_TOO_SMALL: return "y_too_small";
        case PINTZ_ERR_CANCELLATION: return "cancellation_underflow";
        case PINTZ_ERR_TAIL_DIVERGENCE: return "tail_divergence";
        case PINTZ_ERR_QUADRATURE: return "quadrature_failure";
        case PINTZ_ERR_CONVERGENCE: return "convergence_failure";
        case PINTZ_ERR_NO_EXCLUSION: return "no_exclusion";
        case PINTZ_ERR_CHECKPOINT: return "checkpoint_corrupt";
        case PINTZ_ERR_INCOMPLETE_PRIMES: return "incomplete_primes";
        case PINTZ_ERR_CONFIG: return "config_parse_error";
        case PINTZ_ERR_IO: return "io_error";
        case PINTZ_ERR_BUFFER: return "buffer_too_small";
        case PINTZ_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* pintz_last_error(void) { return g_last_error.c_str(); }

/* ---- extreal ---- */

pintz_extreal pintz_extreal_zero(void) { return {0, 0.0, 0.0}; }

pintz_status pintz_extreal_from_double(double v, pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = to_c(pintz::ext_from_double(v)); });
}

pintz_status pintz_extreal_parse(const char* text, pintz_extreal* out) {
    if (auto st = require(text && out, "null argument"); st) return st;
    return guarded([&] { *out = to_c(pintz::ext_parse(text)); });
}

pintz_status pintz_extreal_to_double(pintz_extreal x, double* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = pintz::ext_to_double(from_c(x)); });
}

pintz_status pintz_extreal_mul(pintz_extreal a, pintz_extreal b,
                               pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = to_c(pintz::ext_mul(from_c(a), from_c(b))); });
}

pintz_status pintz_extreal_div(pintz_extreal a, pintz_extreal b,
                               pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = to_c(pintz::ext_div(from_c(a), from_c(b))); });
}

pintz_status pintz_extreal_add(pintz_extreal a, pintz_extreal b,
                               pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = to_c(pintz::ext_add(from_c(a), from_c(b))); });
}

pintz_status pintz_extreal_pow(pintz_extreal a, double r_hi, double r_lo,
                               pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded(
        [&] { *out = to_c(pintz::ext_pow(from_c(a), pintz::DD(r_hi, r_lo))); });
}

pintz_status pintz_extreal_cmp(pintz_extreal a, pintz_extreal b, int32_t* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] { *out = pintz::ext_cmp(from_c(a), from_c(b)); });
}

pintz_status pintz_extreal_format(pintz_extreal x, char* buf, size_t buflen) {
    std::string s;
    pintz_status st = guarded([&] { s = pintz::ext_serialize(from_c(x)); });
    if (st) return st;
    return copy_string(s, buf, buflen);
}

/* ---- mertens ---- */

pintz_status pintz_mertens_run(const pintz_mertens_opts* opts,
                               pintz_scan** out) {
    if (auto st = require(opts && out, "null argument"); st) return st;
    return guarded([&] {
        pintz::MertensOptions o;
        o.limit = opts->limit;
        o.segment_size = opts->segment_size;
        o.threads = opts->threads;
        if (opts->has_verify_d) o.verify_d = opts->verify_d;
        if (opts->checkpoint_path) o.checkpoint_path = opts->checkpoint_path;
        auto* handle = new pintz_scan{pintz::mertens_scan(o)};
        *out = handle;
    });
}

uint64_t pintz_scan_limit(const pintz_scan* s) { return s ? s->s.limit : 0; }
uint64_t pintz_scan_cursor(const pintz_scan* s) { return s ? s->s.cursor : 0; }
int64_t pintz_scan_mertens(const pintz_scan* s) { return s ? s->s.M : 0; }

pintz_status pintz_scan_sum_abs(const pintz_scan* s, char* buf, size_t buflen) {
    if (auto st = require(s != nullptr, "null scan"); st) return st;
    return copy_string(pintz::uint128_to_string(s->s.S_abs), buf, buflen);
}

double pintz_scan_max_ratio(const pintz_scan* s) {
    return s ? s->s.max_ratio : 0.0;
}
uint64_t pintz_scan_argmax(const pintz_scan* s) { return s ? s->s.argmax : 0; }
int32_t pintz_scan_has_violation(const pintz_scan* s) {
    return s && s->s.first_violation ? 1 : 0;
}
uint64_t pintz_scan_first_violation(const pintz_scan* s) {
    return s && s->s.first_violation ? *s->s.first_violation : 0;
}

pintz_status pintz_scan_mean_abs(const pintz_scan* s, double* out) {
    if (auto st = require(s && out, "null argument"); st) return st;
    return guarded([&] { *out = pintz::mean_abs(s->s); });
}

void pintz_scan_free(pintz_scan* s) { delete s; }

pintz_status pintz_pointwise_upper_mean(double d, pintz_extreal y,
                                        pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded(
        [&] { *out = to_c(pintz::pointwise_upper_mean(d, from_c(y))); });
}

/* ---- zeta bounds ---- */

pintz_status pintz_growth_bound_f(pintz_growth_bound* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    auto g = pintz::growth_bound_F();
    *out = {g.c, g.B, g.halfplane_sigma_min};
    return PINTZ_OK;
}

pintz_status pintz_growth_bound_g(pintz_growth_bound* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    auto g = pintz::growth_bound_G();
    *out = {g.c, g.B, g.halfplane_sigma_min};
    return PINTZ_OK;
}

pintz_status pintz_lemma_report_run(pintz_lemma_report** out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded(
        [&] { *out = new pintz_lemma_report{pintz::verify_lemma_chain()}; });
}

size_t pintz_lemma_report_size(const pintz_lemma_report* r) {
    return r ? r->r.checks.size() : 0;
}

pintz_status pintz_lemma_report_get(const pintz_lemma_report* r, size_t index,
                                    pintz_lemma_check* out) {
    if (auto st = require(r && out, "null argument"); st) return st;
    if (auto st = require(index < r->r.checks.size(), "index out of range"); st)
        return st;
    const auto& c = r->r.checks[index];
    out->label = c.label.c_str();
    out->lhs = c.lhs;
    out->rhs = c.rhs;
    out->slack = c.slack;
    out->pass = c.pass ? 1 : 0;
    return PINTZ_OK;
}

int32_t pintz_lemma_report_all_pass(const pintz_lemma_report* r) {
    return r && r->r.all_pass() ? 1 : 0;
}

void pintz_lemma_report_free(pintz_lemma_report* r) { delete r; }

pintz_status pintz_f_at_zero(double beta0, pintz_extreal gamma0,
                             pintz_extreal* out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded(
        [&] { *out = to_c(pintz::f_at_zero(beta0, from_c(gamma0))); });
}

pintz_status pintz_zeta_spot(double re, double im, double* out_re,
                             double* out_im) {
    if (auto st = require(out_re && out_im, "null output"); st) return st;
    return guarded([&] {
        auto z = pintz::zeta_spot({re, im});
        *out_re = z.real();
        *out_im = z.imag();
    });
}

/* ---- theorem ---- */

pintz_status pintz_params_zeta_mertens(double beta0, pintz_extreal gamma0,
                                       double c0, pintz_params** out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] {
        *out = new pintz_params{
            pintz::zeta_mertens_params(beta0, from_c(gamma0), c0)};
    });
}

pintz_status pintz_params_generic(double c_a, double cap_c, double c_f,
                                  double b_f, double c_g, double b_g,
                                  double beta0, pintz_extreal gamma0, double c0,
                                  pintz_extreal f_rho0_abs, pintz_params** out) {
    if (auto st = require(out != nullptr, "null output"); st) return st;
    return guarded([&] {
        pintz::TheoremParams p;
        p.c_A = c_a;
        p.C = cap_c;
        p.F = {c_f, b_f, 0.0};
        p.G = {c_g, b_g, -1.0};
        p.beta0 = beta0;
        p.gamma0 = pintz::ext_abs(from_c(gamma0));
        p.c0 = c0;
        p.F_rho0_abs = from_c(f_rho0_abs);
        pintz::validate_params(p);
        *out = new pintz_params{p};
    });
}

pintz_status pintz_params_set_tail_extra_log(pintz_params* p, int32_t enable) {
    if (auto st = require(p != nullptr, "null params"); st) return st;
    p->p.tail_extra_log_factor = enable != 0;
    return PINTZ_OK;
}

void pintz_params_free(pintz_params* p) { delete p; }

pintz_status pintz_theorem_d1(const pintz_params* p, double y, double* out) {
    if (auto st = require(p && out, "null argument"); st) return st;
    return guarded([&] { *out = pintz::d1(y, p->p.G.c, p->p.G.B); });
}

pintz_status pintz_theorem_d2(const pintz_params* p, double* out) {
    if (auto st = require(p && out, "null argument"); st) return st;
    return guarded([&] { *out = pintz::d2(p->p.beta0, p->p.G.c, p->p.G.B); });
}

pintz_status pintz_theorem_cal_e(const pintz_params* p, double log_y_hi,
                                 double log_y_lo, pintz_extreal* value,
                                 double* integral_abs_error) {
    if (auto st = require(p && value, "null argument"); st) return st;
    return guarded([&] {
        auto r = pintz::cal_e(pintz::DD(log_y_hi, log_y_lo), p->p);
        *value = to_c(r.value);
        if (integral_abs_error) *integral_abs_error = r.abs_error;
    });
}

pintz_status pintz_theorem_tail_bound(const pintz_params* p, double t,
                                      double* out) {
    if (auto st = require(p && out, "null argument"); st) return st;
    return guarded([&] { *out = pintz::cal_e_tail_bound(t, p->p); });
}

pintz_status pintz_theorem_lower_bound(const pintz_params* p, pintz_extreal y,
                                       pintz_breakdown* out) {
    if (auto st = require(p && out, "null argument"); st) return st;
    return guarded(
        [&] { *out = to_c(pintz::lower_bound(from_c(y), p->p)); });
}

pintz_status pintz_theorem_mean_lower_constant(const pintz_params* p,
                                               pintz_extreal y0, double* c,
                                               int32_t* grid_fallback) {
    if (auto st = require(p && c, "null argument"); st) return st;
    return guarded([&] {
        auto r = pintz::mean_lower_constant(from_c(y0), p->p);
        *c = r.c;
        if (grid_fallback) *grid_fallback = r.grid_fallback ? 1 : 0;
    });
}

/* ---- inference ---- */

namespace {

pintz::ExclusionQuery query_from_c(const pintz_infer_query* q) {
    pintz::ExclusionQuery out;
    out.Y = from_c(q->y);
    out.d = q->d;
    out.beta0 = q->beta0;
    out.gamma0 = from_c(q->gamma0);
    out.c0 = q->c0 > 0.0 ? q->c0 : 0.1;
    out.optimize_c0 = q->optimize_c0 != 0;
    return out;
}

} // namespace

pintz_status pintz_infer_check(const pintz_infer_query* q,
                               pintz_exclusion_result* out) {
    if (auto st = require(q && out, "null argument"); st) return st;
    return guarded([&] {
        auto r = pintz::exclusion_check(query_from_c(q));
        out->excluded = r.verdict == pintz::Verdict::Excluded ? 1 : 0;
        out->lower = to_c(r.lower);
        out->upper = to_c(r.upper);
        out->breakdown = to_c(r.breakdown);
        out->c0_used = r.c0_used;
    });
}

pintz_status pintz_infer_max_gamma(const pintz_infer_query* q, double tol_rel,
                                   pintz_extreal* gamma_star,
                                   int32_t* grid_fallback) {
    if (auto st = require(q && gamma_star, "null argument"); st) return st;
    return guarded([&] {
        auto qq = query_from_c(q);
        auto r = pintz::exclusion_region_gamma(qq.Y, qq.d, qq.beta0, qq.c0,
                                               tol_rel > 0 ? tol_rel : 1e-3);
        *gamma_star = to_c(r.gamma_star);
        if (grid_fallback) *grid_fallback = r.grid_fallback ? 1 : 0;
    });
}

pintz_status pintz_infer_min_beta(const pintz_infer_query* q, double tol_abs,
                                  double* beta_star, int32_t* grid_fallback) {
    if (auto st = require(q && beta_star, "null argument"); st) return st;
    return guarded([&] {
        auto qq = query_from_c(q);
        auto r = pintz::exclusion_region_beta(qq.Y, qq.d, qq.gamma0, qq.c0,
                                              tol_abs > 0 ? tol_abs : 1e-4);
        *beta_star = r.beta_star;
        if (grid_fallback) *grid_fallback = r.grid_fallback ? 1 : 0;
    });
}

pintz_status pintz_infer_pintz87(pintz_extreal y, double beta0,
                                 pintz_extreal gamma0, int32_t* present,
                                 pintz_extreal* bound) {
    if (auto st = require(present && bound, "null argument"); st) return st;
    return guarded([&] {
        auto r = pintz::pintz87_bound(from_c(y), beta0, from_c(gamma0));
        *present = r.has_value() ? 1 : 0;
        *bound = r ? to_c(*r) : pintz_extreal_zero();
    });
}

} // extern "C"
