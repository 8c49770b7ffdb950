// pintz-forge: certified Mertens mean-value bounds, the explicit theorem
// engine behind them, and zeta zero-exclusion inference, with
// machine-readable reports.  Everything computational goes through the
// libpintz C API.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "pintz/pintz.h"

using pintz_cli::dump_canonical;
using pintz_cli::fmt17;
using pintz_cli::Manifest;
using pintz_cli::ordered_json;
using pintz_cli::Resolver;

namespace {

struct CliError {
    int exit_code; // 2 usage/precondition, 3 computational
    std::string message;
};

bool status_is_usage(pintz_status st) {
    switch (st) {
        case PINTZ_ERR_USAGE:
        case PINTZ_ERR_DOMAIN:
        case PINTZ_ERR_INVALID_PARAMS:
        case PINTZ_ERR_Y_TOO_SMALL:
        case PINTZ_ERR_CHECKPOINT:
        case PINTZ_ERR_INCOMPLETE_PRIMES:
        case PINTZ_ERR_CONFIG:
        case PINTZ_ERR_BUFFER:
            return true;
        default:
            return false;
    }
}

void require_ok(pintz_status st, const std::string& context) {
    if (st == PINTZ_OK) return;
    throw CliError{status_is_usage(st) ? 2 : 3,
                   context + ": " + pintz_status_name(st) + ": " +
                       pintz_last_error()};
}

std::string ext_str(pintz_extreal x) {
    char buf[96];
    require_ok(pintz_extreal_format(x, buf, sizeof buf), "format");
    return buf;
}

pintz_extreal parse_ext(const std::string& s, const std::string& what) {
    pintz_extreal out;
    if (pintz_extreal_parse(s.c_str(), &out) != PINTZ_OK)
        throw CliError{2, "bad value for " + what + ": " + pintz_last_error() +
                              " (use a decimal, scientific notation, or "
                              "exp:<LOGVALUE>)"};
    return out;
}

double parse_dbl(const std::string& s, const std::string& what) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (!end || *end != '\0' || s.empty())
        throw CliError{2, "bad numeric value for " + what + ": '" + s + "'"};
    return v;
}

uint64_t parse_u64(const std::string& s, const std::string& what) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (!end || *end != '\0' || s.empty())
        throw CliError{2, "bad integer value for " + what + ": '" + s + "'"};
    return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw CliError{2, "bad boolean value for " + what + ": '" + s + "'"};
}

ordered_json breakdown_json(const pintz_breakdown& b) {
    ordered_json j;
    j["y_tilde"] = ext_str(b.y_tilde);
    j["main_term"] = ext_str(b.main_term);
    j["cal_e"] = ext_str(b.cal_e);
    j["tail_term"] = ext_str(b.tail_term);
    j["total"] = ext_str(b.total);
    j["quadrature_abs_error"] = b.quadrature_abs_error;
    return j;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    ordered_json result;
    CsvTable csv;
};

void emit_report(const std::string& subcommand,
                 const std::vector<std::pair<std::string, std::string>>& params,
                 const Report& rep, const std::string& emit_mode,
                 double wall_s) {
    std::string canonical = dump_canonical(rep.result);
    Manifest m;
    m.subcommand = subcommand;
    m.parameters = params;
    m.wall_time_s = wall_s;
    m.result_digest = pintz_cli::digest_crc(canonical);
    if (emit_mode == "json") {
        ordered_json report;
        report["manifest"] = m.to_json(pintz_version());
        report["result"] = rep.result;
        std::cout << dump_canonical(report) << "\n";
        return;
    }
    // csv: manifest as comment lines, then the projected table
    std::cout << "# subcommand=" << subcommand
              << " tool_version=" << pintz_version()
              << " result_digest=" << pintz_cli::digest_hex(canonical)
              << " wall_time_s=" << fmt17(wall_s) << "\n";
    for (const auto& [k, v] : params) std::cout << "# param " << k << "=" << v << "\n";
    for (size_t i = 0; i < rep.csv.header.size(); ++i)
        std::cout << (i ? "," : "") << rep.csv.header[i];
    std::cout << "\n";
    for (const auto& row : rep.csv.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
    }
}

// all config keys we understand, across subcommands
const std::vector<std::string> kConfigKeys = {
    "limit",   "segment-size", "threads",     "verify-d", "checkpoint",
    "emit",    "y",            "d",           "beta0",    "gamma0",
    "c0",      "preset",       "ca",          "cc",       "cf",
    "bf",      "cg",           "bg",          "f-rho0",   "tol-rel",
    "tol-abs", "optimize-c0",  "tail-extra-log"};

struct RawOpt {
    std::string value;
    CLI::Option* opt = nullptr;
    size_t count() const { return opt ? opt->count() : 0; }
};

class ParamSet {
  public:
    ParamSet(const Resolver& r) : r_(r) {}

    std::optional<std::string> get(const RawOpt& raw, const std::string& key,
                                   const char* env = nullptr,
                                   std::optional<std::string> def = {}) {
        auto v = r_.resolve(key, raw.count(), raw.value, env, std::move(def));
        if (v) resolved_.emplace_back(key, *v);
        return v;
    }

    std::string require(const RawOpt& raw, const std::string& key,
                        const char* env = nullptr) {
        auto v = get(raw, key, env);
        if (!v)
            throw CliError{2, "missing required parameter --" + key +
                                  " (flag or config key '" + key + "')"};
        return *v;
    }

    // canonicalize a recorded value after parsing (for manifest stability)
    void canonicalize(const std::string& key, const std::string& value) {
        for (auto& [k, v] : resolved_)
            if (k == key) v = value;
    }

    const std::vector<std::pair<std::string, std::string>>& resolved() const {
        return resolved_;
    }

  private:
    Resolver r_;
    std::vector<std::pair<std::string, std::string>> resolved_;
};

// --- subcommand option bundles ---

struct MertensOptsRaw {
    RawOpt limit, segment_size, threads, verify_d, checkpoint;
};

struct TheoremOptsRaw {
    RawOpt y, beta0, gamma0, c0, preset, ca, cc, cf, bf, cg, bg, f_rho0;
    RawOpt tail_extra_log;
};

struct InferOptsRaw {
    RawOpt y, d, beta0, gamma0, c0, optimize_c0, tol_rel, tol_abs;
};

void add_raw(CLI::App* app, RawOpt& raw, const std::string& flag,
             const std::string& desc) {
    raw.opt = app->add_option(flag, raw.value, desc);
}

void add_raw_flag(CLI::App* app, RawOpt& raw, const std::string& flag,
                  const std::string& desc) {
    raw.opt = app->add_flag(flag, raw.value, desc);
}

// builds a theorem params handle from resolved options; returns the handle
// plus the resolved beta0/gamma0/c0 (the CLI-level view)
struct ResolvedTheorem {
    pintz_params* params = nullptr;
    pintz_extreal y{};
    double beta0 = 0.0;
    pintz_extreal gamma0{};
    double c0 = 0.1;
};

ResolvedTheorem build_theorem(ParamSet& ps, TheoremOptsRaw& raw,
                              bool need_y = true) {
    ResolvedTheorem out;
    if (need_y) {
        std::string ys = ps.require(raw.y, "y");
        out.y = parse_ext(ys, "--y");
        ps.canonicalize("y", ext_str(out.y));
    }
    out.beta0 = parse_dbl(ps.require(raw.beta0, "beta0"), "--beta0");
    std::string gs = ps.require(raw.gamma0, "gamma0");
    out.gamma0 = parse_ext(gs, "--gamma0");
    ps.canonicalize("gamma0", ext_str(out.gamma0));
    out.c0 = parse_dbl(*ps.get(raw.c0, "c0", nullptr, std::string("0.1")), "--c0");

    std::string preset =
        *ps.get(raw.preset, "preset", nullptr, std::string("zeta-mertens"));
    bool generic = raw.ca.count() || raw.cc.count() || raw.cf.count() ||
                   raw.bf.count() || raw.cg.count() || raw.bg.count();
    if (generic) {
        double ca = parse_dbl(ps.require(raw.ca, "ca"), "--ca");
        double cc = parse_dbl(ps.require(raw.cc, "cc"), "--cc");
        double cf = parse_dbl(ps.require(raw.cf, "cf"), "--cf");
        double bf = parse_dbl(ps.require(raw.bf, "bf"), "--bf");
        double cg = parse_dbl(ps.require(raw.cg, "cg"), "--cg");
        double bg = parse_dbl(ps.require(raw.bg, "bg"), "--bg");
        pintz_extreal f0;
        if (raw.f_rho0.count() || ps.get(raw.f_rho0, "f-rho0").has_value()) {
            f0 = parse_ext(ps.require(raw.f_rho0, "f-rho0"), "--f-rho0");
        } else {
            throw CliError{2, "generic parameters require --f-rho0 (|F(rho0)|)"};
        }
        require_ok(pintz_params_generic(ca, cc, cf, bf, cg, bg, out.beta0,
                                        out.gamma0, out.c0, f0, &out.params),
                   "params");
    } else {
        if (preset != "zeta-mertens")
            throw CliError{2, "unknown preset '" + preset +
                                  "' (available: zeta-mertens)"};
        require_ok(pintz_params_zeta_mertens(out.beta0, out.gamma0, out.c0,
                                             &out.params),
                   "params");
        if (raw.f_rho0.count()) {
            // explicit |F(rho0)| override on the zeta preset
            pintz_extreal f0 =
                parse_ext(ps.require(raw.f_rho0, "f-rho0"), "--f-rho0");
            pintz_params_free(out.params);
            pintz_growth_bound gf, gg;
            pintz_growth_bound_f(&gf);
            pintz_growth_bound_g(&gg);
            require_ok(pintz_params_generic(1.0, 1.0, gf.c, gf.exponent, gg.c,
                                            gg.exponent, out.beta0, out.gamma0,
                                            out.c0, f0, &out.params),
                       "params");
        }
    }
    std::string tel = *ps.get(raw.tail_extra_log, "tail-extra-log", nullptr,
                              std::string("false"));
    bool tail_extra = raw.tail_extra_log.count()
                          ? true
                          : parse_bool(tel, "tail-extra-log");
    if (tail_extra) pintz_params_set_tail_extra_log(out.params, 1);
    return out;
}

// --- subcommand runners ---

Report run_mertens(ParamSet& ps, MertensOptsRaw& raw) {
    pintz_mertens_opts o{};
    o.limit = parse_u64(ps.require(raw.limit, "limit"), "--limit");
    o.segment_size = parse_u64(
        *ps.get(raw.segment_size, "segment-size", nullptr, std::string("1000000")),
        "--segment-size");
    o.threads = static_cast<uint32_t>(parse_u64(
        *ps.get(raw.threads, "threads", "PINTZ_THREADS", std::string("0")),
        "--threads"));
    auto vd = ps.get(raw.verify_d, "verify-d");
    double vd_val = 0.0;
    if (vd) {
        vd_val = parse_dbl(*vd, "--verify-d");
        o.has_verify_d = 1;
        o.verify_d = vd_val;
    }
    std::string ck_path;
    auto ck = ps.get(raw.checkpoint, "checkpoint");
    if (ck) {
        ck_path = *ck;
        const char* dir = std::getenv("PINTZ_CHECKPOINT_DIR");
        if (dir && *dir && !ck_path.empty() && ck_path[0] != '/') {
            ck_path = std::string(dir) + "/" + ck_path;
            ps.canonicalize("checkpoint", ck_path);
        }
        o.checkpoint_path = ck_path.c_str();
    }

    pintz_scan* scan = nullptr;
    require_ok(pintz_mertens_run(&o, &scan), "mertens");
    char sabs[64];
    require_ok(pintz_scan_sum_abs(scan, sabs, sizeof sabs), "mertens");
    double mean = 0.0;
    require_ok(pintz_scan_mean_abs(scan, &mean), "mertens");

    Report rep;
    rep.result["limit"] = pintz_scan_limit(scan);
    rep.result["cursor"] = pintz_scan_cursor(scan);
    rep.result["M"] = pintz_scan_mertens(scan);
    rep.result["S_abs"] = sabs;
    rep.result["max_ratio"] = pintz_scan_max_ratio(scan);
    rep.result["argmax"] = pintz_scan_argmax(scan);
    if (pintz_scan_has_violation(scan))
        rep.result["first_violation"] = pintz_scan_first_violation(scan);
    else
        rep.result["first_violation"] = nullptr;
    rep.result["mean_abs"] = mean;

    rep.csv.header = {"limit",  "cursor", "M",
                      "S_abs",  "max_ratio", "argmax",
                      "first_violation", "mean_abs"};
    rep.csv.rows.push_back(
        {std::to_string(pintz_scan_limit(scan)),
         std::to_string(pintz_scan_cursor(scan)),
         std::to_string(pintz_scan_mertens(scan)), sabs,
         fmt17(pintz_scan_max_ratio(scan)),
         std::to_string(pintz_scan_argmax(scan)),
         pintz_scan_has_violation(scan)
             ? std::to_string(pintz_scan_first_violation(scan))
             : "",
         fmt17(mean)});
    pintz_scan_free(scan);
    return rep;
}

Report run_bounds_verify() {
    pintz_lemma_report* r = nullptr;
    require_ok(pintz_lemma_report_run(&r), "bounds verify");
    Report rep;
    ordered_json checks = ordered_json::array();
    rep.csv.header = {"label", "lhs", "rhs", "slack", "pass"};
    for (size_t i = 0; i < pintz_lemma_report_size(r); ++i) {
        pintz_lemma_check c;
        require_ok(pintz_lemma_report_get(r, i, &c), "bounds verify");
        ordered_json jc;
        jc["label"] = c.label;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["slack"] = c.slack;
        jc["pass"] = c.pass != 0;
        checks.push_back(jc);
        rep.csv.rows.push_back({c.label, fmt17(c.lhs), fmt17(c.rhs),
                                fmt17(c.slack), c.pass ? "true" : "false"});
    }
    rep.result["all_pass"] = pintz_lemma_report_all_pass(r) != 0;
    rep.result["checks"] = checks;
    pintz_lemma_report_free(r);
    return rep;
}

Report run_theorem_eval(ParamSet& ps, TheoremOptsRaw& raw) {
    ResolvedTheorem t = build_theorem(ps, raw);
    pintz_breakdown bb;
    require_ok(pintz_theorem_lower_bound(t.params, t.y, &bb), "theorem eval");
    double d2v = 0.0;
    require_ok(pintz_theorem_d2(t.params, &d2v), "theorem eval");
    double lam = bb.y_tilde.ln_hi + bb.y_tilde.ln_lo;
    double d1v = 0.0;
    require_ok(pintz_theorem_d1(t.params, lam, &d1v), "theorem eval");
    double mlc = 0.0;
    int32_t grid_fb = 0;
    require_ok(pintz_theorem_mean_lower_constant(t.params, t.y, &mlc, &grid_fb),
               "theorem eval");
    double total_dbl = 0.0;
    pintz_extreal_to_double(bb.total, &total_dbl);

    Report rep;
    rep.result["y"] = ext_str(t.y);
    rep.result["beta0"] = t.beta0;
    rep.result["gamma0"] = ext_str(t.gamma0);
    rep.result["c0"] = t.c0;
    rep.result["d1_log_ytilde"] = d1v;
    rep.result["d2"] = d2v;
    rep.result["breakdown"] = breakdown_json(bb);
    rep.result["total"] = ext_str(bb.total);
    rep.result["total_double"] = total_dbl;
    rep.result["mean_lower_constant"] = mlc;
    rep.result["mean_lower_grid_fallback"] = grid_fb != 0;

    rep.csv.header = {"y",        "beta0",    "gamma0",
                      "c0",       "total",    "main_term",
                      "cal_e",    "tail_term", "quadrature_abs_error",
                      "mean_lower_constant"};
    rep.csv.rows.push_back({ext_str(t.y), fmt17(t.beta0), ext_str(t.gamma0),
                            fmt17(t.c0), ext_str(bb.total),
                            ext_str(bb.main_term), ext_str(bb.cal_e),
                            ext_str(bb.tail_term),
                            fmt17(bb.quadrature_abs_error), fmt17(mlc)});
    pintz_params_free(t.params);
    return rep;
}

pintz_infer_query build_infer_query(ParamSet& ps, InferOptsRaw& raw,
                                    bool need_beta, bool need_gamma,
                                    bool need_d = true) {
    pintz_infer_query q{};
    std::string ys = ps.require(raw.y, "y");
    q.y = parse_ext(ys, "--y");
    ps.canonicalize("y", ext_str(q.y));
    q.d = need_d ? parse_dbl(ps.require(raw.d, "d"), "--d") : 1.0;
    if (need_beta) q.beta0 = parse_dbl(ps.require(raw.beta0, "beta0"), "--beta0");
    if (need_gamma) {
        std::string gs = ps.require(raw.gamma0, "gamma0");
        q.gamma0 = parse_ext(gs, "--gamma0");
        ps.canonicalize("gamma0", ext_str(q.gamma0));
    }
    q.c0 = parse_dbl(*ps.get(raw.c0, "c0", nullptr, std::string("0.1")), "--c0");
    std::string oc = *ps.get(raw.optimize_c0, "optimize-c0", nullptr,
                             std::string("false"));
    q.optimize_c0 =
        raw.optimize_c0.count() ? 1 : (parse_bool(oc, "optimize-c0") ? 1 : 0);
    return q;
}

ordered_json exclusion_json(const pintz_infer_query& q,
                            const pintz_exclusion_result& r) {
    ordered_json j;
    j["verdict"] = r.excluded ? "Excluded" : "Inconclusive";
    j["y"] = ext_str(q.y);
    j["d"] = q.d;
    j["beta0"] = q.beta0;
    j["gamma0"] = ext_str(q.gamma0);
    j["c0_used"] = r.c0_used;
    j["lower"] = ext_str(r.lower);
    j["upper"] = ext_str(r.upper);
    j["breakdown"] = breakdown_json(r.breakdown);
    return j;
}

Report run_infer_check(ParamSet& ps, InferOptsRaw& raw) {
    pintz_infer_query q = build_infer_query(ps, raw, true, true);
    pintz_exclusion_result r;
    require_ok(pintz_infer_check(&q, &r), "infer check");
    Report rep;
    rep.result = exclusion_json(q, r);
    rep.csv.header = {"verdict", "lower", "upper", "c0_used", "total"};
    rep.csv.rows.push_back({r.excluded ? "Excluded" : "Inconclusive",
                            ext_str(r.lower), ext_str(r.upper),
                            fmt17(r.c0_used), ext_str(r.breakdown.total)});
    return rep;
}

Report run_infer_max_gamma(ParamSet& ps, InferOptsRaw& raw) {
    pintz_infer_query q = build_infer_query(ps, raw, true, false);
    double tol_rel = parse_dbl(
        *ps.get(raw.tol_rel, "tol-rel", nullptr, std::string("1e-3")),
        "--tol-rel");
    pintz_extreal gamma_star;
    int32_t fb = 0;
    require_ok(pintz_infer_max_gamma(&q, tol_rel, &gamma_star, &fb),
               "infer max-gamma");
    // audit breakdown at the boundary
    pintz_infer_query qb = q;
    qb.gamma0 = gamma_star;
    pintz_exclusion_result r;
    require_ok(pintz_infer_check(&qb, &r), "infer max-gamma");

    Report rep;
    rep.result["gamma_star"] = ext_str(gamma_star);
    rep.result["ln_gamma_star"] = gamma_star.ln_hi + gamma_star.ln_lo;
    rep.result["grid_fallback"] = fb != 0;
    rep.result["verdict_at_gamma_star"] =
        r.excluded ? "Excluded" : "Inconclusive";
    rep.result["breakdown"] = breakdown_json(r.breakdown);
    rep.csv.header = {"gamma_star", "ln_gamma_star", "grid_fallback"};
    rep.csv.rows.push_back({ext_str(gamma_star),
                            fmt17(gamma_star.ln_hi + gamma_star.ln_lo),
                            fb ? "true" : "false"});
    return rep;
}

Report run_infer_min_beta(ParamSet& ps, InferOptsRaw& raw) {
    pintz_infer_query q = build_infer_query(ps, raw, false, true);
    double tol_abs = parse_dbl(
        *ps.get(raw.tol_abs, "tol-abs", nullptr, std::string("1e-4")),
        "--tol-abs");
    double beta_star = 0.0;
    int32_t fb = 0;
    require_ok(pintz_infer_min_beta(&q, tol_abs, &beta_star, &fb),
               "infer min-beta");
    pintz_infer_query qb = q;
    qb.beta0 = beta_star;
    pintz_exclusion_result r;
    require_ok(pintz_infer_check(&qb, &r), "infer min-beta");

    Report rep;
    rep.result["beta_star"] = beta_star;
    rep.result["grid_fallback"] = fb != 0;
    rep.result["verdict_at_beta_star"] =
        r.excluded ? "Excluded" : "Inconclusive";
    rep.result["breakdown"] = breakdown_json(r.breakdown);
    rep.csv.header = {"beta_star", "grid_fallback"};
    rep.csv.rows.push_back({fmt17(beta_star), fb ? "true" : "false"});
    return rep;
}

Report run_infer_pintz87(ParamSet& ps, InferOptsRaw& raw) {
    pintz_infer_query q = build_infer_query(ps, raw, true, true, false);
    int32_t present = 0;
    pintz_extreal bound;
    require_ok(pintz_infer_pintz87(q.y, q.beta0, q.gamma0, &present, &bound),
               "infer pintz87");
    Report rep;
    rep.result["present"] = present != 0;
    if (present)
        rep.result["bound"] = ext_str(bound);
    else
        rep.result["bound"] = nullptr;
    rep.csv.header = {"present", "bound"};
    rep.csv.rows.push_back(
        {present ? "true" : "false", present ? ext_str(bound) : ""});
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pintz-forge: Mertens mean-value bounds and zeta "
                 "zero-exclusion inference"};
    app.require_subcommand(1);
    std::string config_path, emit_raw;
    auto* config_opt = app.add_option("--config", config_path,
                                      "key=value configuration file");
    auto* emit_opt =
        app.add_option("--emit", emit_raw, "output format: json or csv");

    MertensOptsRaw mraw;
    auto* mertens = app.add_subcommand("mertens",
                                       "segmented Mobius sieve / Mertens scan");
    mertens->fallthrough();
    add_raw(mertens, mraw.limit, "--limit", "scan up to this n (inclusive)");
    add_raw(mertens, mraw.segment_size, "--segment-size", "sieve segment length");
    add_raw(mertens, mraw.threads, "--threads", "worker threads (0 = auto)");
    add_raw(mertens, mraw.verify_d, "--verify-d",
            "check |M(n)| <= d sqrt(n) and report the first violation");
    add_raw(mertens, mraw.checkpoint, "--checkpoint",
            "JSON-lines checkpoint file (resumes if present)");

    auto* bounds = app.add_subcommand("bounds", "zeta-side growth bounds");
    bounds->fallthrough();
    bounds->require_subcommand(1);
    auto* bounds_verify = bounds->add_subcommand(
        "verify", "re-verify every inequality behind the shipped constants");
    bounds_verify->fallthrough();

    TheoremOptsRaw traw;
    auto* theorem = app.add_subcommand("theorem", "mean-value theorem engine");
    theorem->fallthrough();
    theorem->require_subcommand(1);
    auto* theorem_eval =
        theorem->add_subcommand("eval", "evaluate the certified lower bound");
    theorem_eval->fallthrough();
    add_raw(theorem_eval, traw.y, "--y", "Y (decimal or exp:<LOGY>)");
    add_raw(theorem_eval, traw.beta0, "--beta0", "zero real part in (0,1]");
    add_raw(theorem_eval, traw.gamma0, "--gamma0",
            "zero imaginary part (decimal or exp:<LOGG>)");
    add_raw(theorem_eval, traw.c0, "--c0", "contour offset in (0, beta0)");
    add_raw(theorem_eval, traw.preset, "--preset", "parameter preset (zeta-mertens)");
    add_raw(theorem_eval, traw.ca, "--ca", "generic: c_A");
    add_raw(theorem_eval, traw.cc, "--cc", "generic: C");
    add_raw(theorem_eval, traw.cf, "--cf", "generic: c_F");
    add_raw(theorem_eval, traw.bf, "--bf", "generic: B_F");
    add_raw(theorem_eval, traw.cg, "--cg", "generic: c_G");
    add_raw(theorem_eval, traw.bg, "--bg", "generic: B_G");
    add_raw(theorem_eval, traw.f_rho0, "--f-rho0", "|F(rho0)|");
    add_raw_flag(theorem_eval, traw.tail_extra_log, "--tail-extra-log",
                 "include the alternative extra log(Y~) tail factor");

    InferOptsRaw iraw_check, iraw_maxg, iraw_minb, iraw_p87;
    auto* infer = app.add_subcommand("infer", "zero-exclusion inference");
    infer->fallthrough();
    infer->require_subcommand(1);
    auto add_infer_common = [&](CLI::App* sub, InferOptsRaw& raw, bool beta,
                                bool gamma, bool d) {
        add_raw(sub, raw.y, "--y", "verified range end Y");
        if (d) add_raw(sub, raw.d, "--d", "pointwise constant d");
        if (beta) add_raw(sub, raw.beta0, "--beta0", "zero real part");
        if (gamma) add_raw(sub, raw.gamma0, "--gamma0", "zero imaginary part");
        add_raw(sub, raw.c0, "--c0", "contour offset (default 0.1)");
        add_raw_flag(sub, raw.optimize_c0, "--optimize-c0",
                     "grid-search c0 over (0.01, beta0-0.01)");
    };
    auto* infer_check = infer->add_subcommand("check", "single-point verdict");
    infer_check->fallthrough();
    add_infer_common(infer_check, iraw_check, true, true, true);
    auto* infer_maxg =
        infer->add_subcommand("max-gamma", "largest certified gamma*");
    infer_maxg->fallthrough();
    add_infer_common(infer_maxg, iraw_maxg, true, false, true);
    add_raw(infer_maxg, iraw_maxg.tol_rel, "--tol-rel",
            "relative tolerance on ln gamma*");
    auto* infer_minb =
        infer->add_subcommand("min-beta", "smallest certified beta*");
    infer_minb->fallthrough();
    add_infer_common(infer_minb, iraw_minb, false, true, true);
    add_raw(infer_minb, iraw_minb.tol_abs, "--tol-abs",
            "absolute tolerance on beta*");
    auto* infer_p87 = infer->add_subcommand(
        "pintz87", "comparison bound Y^beta0/gamma0^5");
    infer_p87->fallthrough();
    add_infer_common(infer_p87, iraw_p87, true, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "remedy: run 'pintz-forge --help' (or '<subcommand> "
                     "--help') for the accepted flags\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        std::map<std::string, std::string> config;
        if (config_opt->count()) {
            try {
                config = pintz_cli::load_config(config_path, kConfigKeys);
            } catch (const pintz_cli::ConfigError& e) {
                throw CliError{2, e.message};
            }
        }
        Resolver resolver(config);
        ParamSet ps(resolver);
        RawOpt emit_ro;
        emit_ro.opt = emit_opt;
        emit_ro.value = emit_raw;
        std::string emit_mode =
            *ps.get(emit_ro, "emit", nullptr, std::string("json"));
        if (emit_mode != "json" && emit_mode != "csv")
            throw CliError{2, "bad --emit value '" + emit_mode +
                                  "' (expected json or csv)"};

        std::string name;
        Report rep;
        if (mertens->parsed()) {
            name = "mertens";
            rep = run_mertens(ps, mraw);
        } else if (bounds->parsed() && bounds_verify->parsed()) {
            name = "bounds verify";
            rep = run_bounds_verify();
        } else if (theorem->parsed() && theorem_eval->parsed()) {
            name = "theorem eval";
            rep = run_theorem_eval(ps, traw);
        } else if (infer->parsed()) {
            if (infer_check->parsed()) {
                name = "infer check";
                rep = run_infer_check(ps, iraw_check);
            } else if (infer_maxg->parsed()) {
                name = "infer max-gamma";
                rep = run_infer_max_gamma(ps, iraw_maxg);
            } else if (infer_minb->parsed()) {
                name = "infer min-beta";
                rep = run_infer_min_beta(ps, iraw_minb);
            } else {
                name = "infer pintz87";
                rep = run_infer_pintz87(ps, iraw_p87);
            }
        } else {
            throw CliError{2, "no subcommand selected"};
        }

        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          started)
                .count();
        emit_report(name, ps.resolved(), rep, emit_mode, wall);
        return 0;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
