#include "mobius.hpp"

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "crc32.hpp"
#include "errors.hpp"

namespace pintz {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex8(uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

} // namespace

std::string uint128_to_string(uint128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 47;
    buf[i] = '\0';
    while (v > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i);
}

namespace {

uint128 uint128_from_string(const std::string& s) {
    if (s.empty()) throw CheckpointCorrupt("empty S_abs field");
    uint128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw CheckpointCorrupt("non-digit in S_abs field");
        uint128 next = v * 10 + static_cast<unsigned>(c - '0');
        if (next < v) throw CheckpointCorrupt("S_abs overflows 128 bits");
        v = next;
    }
    return v;
}

double uint128_to_double(uint128 v) {
    return std::ldexp(static_cast<double>(static_cast<uint64_t>(v >> 64)), 64) +
           static_cast<double>(static_cast<uint64_t>(v));
}

} // namespace

PrimeTable build_prime_table(uint64_t limit) {
    PrimeTable t;
    t.limit = limit;
    if (limit < 2) return t;
    std::vector<uint8_t> composite(limit + 1, 0);
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) t.primes.push_back(static_cast<uint32_t>(i));
    return t;
}

SieveSegment mobius_segment(uint64_t lo, uint64_t hi, const PrimeTable& table) {
    if (lo < 1 || lo >= hi)
        throw DomainError("mobius_segment: requires 1 <= lo < hi");
    uint64_t need = isqrt_u64(hi - 1);
    if (table.limit < need)
        throw IncompletePrimes("mobius_segment: prime table covers " +
                               std::to_string(table.limit) + " but sqrt(hi-1) = " +
                               std::to_string(need));

    const size_t len = static_cast<size_t>(hi - lo);
    std::vector<int8_t> sgn(len, 1);
    std::vector<uint64_t> rem(len);
    for (size_t i = 0; i < len; ++i) rem[i] = lo + i;

    for (uint32_t p : table.primes) {
        uint64_t p64 = p;
        if (p64 * p64 > hi - 1) break;
        uint64_t start = ((lo + p64 - 1) / p64) * p64;
        for (uint64_t n = start; n < hi; n += p64) {
            size_t i = static_cast<size_t>(n - lo);
            rem[i] /= p64;
            sgn[i] = static_cast<int8_t>(-sgn[i]); // 0 stays 0
        }
        uint64_t p2 = p64 * p64;
        uint64_t start2 = ((lo + p2 - 1) / p2) * p2;
        for (uint64_t n = start2; n < hi; n += p2)
            sgn[static_cast<size_t>(n - lo)] = 0;
    }

    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.mu.resize(len);
    for (size_t i = 0; i < len; ++i) {
        if (sgn[i] == 0)
            seg.mu[i] = 0;
        else
            // leftover factor > sqrt(hi-1) appears exactly once
            seg.mu[i] = rem[i] > 1 ? static_cast<int8_t>(-sgn[i]) : sgn[i];
    }
    return seg;
}

uint64_t violation_scale_d(double d) {
    if (!(d > 0.0) || d > 1000.0)
        throw DomainError("pointwise bound d must be in (0, 1000]");
    return static_cast<uint64_t>(std::llround(d * 1e6));
}

bool violates_pointwise_bound(int64_t m, uint64_t n, uint64_t d_scaled) {
    uint64_t am = static_cast<uint64_t>(m < 0 ? -m : m);
    // quick double prefilter; exact 128-bit compare only near the boundary
    double lhs = static_cast<double>(am) * static_cast<double>(am) * 1e12;
    double rhs = static_cast<double>(d_scaled) * static_cast<double>(d_scaled) *
                 static_cast<double>(n);
    if (lhs < rhs * 0.999999999) return false;
    uint128 l = static_cast<uint128>(am) * am * 1000000000000ULL;
    uint128 r = static_cast<uint128>(d_scaled) * d_scaled * n;
    return l > r;
}

namespace {

// exact test am^2/n > bm^2/bn with a double prefilter
bool ratio_exceeds(uint64_t am, uint64_t n, uint64_t bm, uint64_t bn) {
    if (bn == 0) return true; // no incumbent yet
    double lhs = static_cast<double>(am) * static_cast<double>(am) *
                 static_cast<double>(bn);
    double rhs = static_cast<double>(bm) * static_cast<double>(bm) *
                 static_cast<double>(n);
    if (lhs < rhs * 0.999999999) return false;
    if (lhs > rhs * 1.000000001) return true;
    return static_cast<uint128>(am) * am * bn > static_cast<uint128>(bm) * bm * n;
}

void fold_segment(MertensScan& st, const SieveSegment& seg,
                  std::optional<uint64_t> d_scaled) {
    for (uint64_t n = seg.lo; n < seg.hi; ++n) {
        if (n > 1)
            st.S_abs += static_cast<uint64_t>(st.M < 0 ? -st.M : st.M); // |M(n-1)|
        st.M += seg.mu[static_cast<size_t>(n - seg.lo)];
        if (n >= 2) {
            uint64_t am = static_cast<uint64_t>(st.M < 0 ? -st.M : st.M);
            if (ratio_exceeds(am, n, st.argmax_abs_m, st.argmax)) {
                st.argmax = n;
                st.argmax_abs_m = am;
                st.max_ratio = static_cast<double>(am) /
                               std::sqrt(static_cast<double>(n));
            }
            if (d_scaled && !st.first_violation &&
                violates_pointwise_bound(st.M, n, *d_scaled))
                st.first_violation = n;
        }
    }
    st.cursor = seg.hi - 1;
}

std::string canonical_fields(const MertensScan& s) {
    std::string out = "{\"cursor\":" + std::to_string(s.cursor) +
                      ",\"M\":" + std::to_string(s.M) + ",\"S_abs\":\"" +
                      uint128_to_string(s.S_abs) + "\",\"max_ratio\":" +
                      fmt17(s.max_ratio) + ",\"argmax\":" +
                      std::to_string(s.argmax);
    if (s.first_violation)
        out += ",\"first_violation\":" + std::to_string(*s.first_violation);
    return out;
}

void validate_scan_invariants(const MertensScan& s) {
    if (static_cast<uint64_t>(s.M < 0 ? -s.M : s.M) > s.cursor)
        throw CheckpointCorrupt("checkpoint violates |M| <= cursor");
    if (s.S_abs > static_cast<uint128>(s.cursor) * s.cursor)
        throw CheckpointCorrupt("checkpoint violates S_abs <= cursor^2");
    if (s.cursor >= 2) {
        if (s.argmax < 2 || s.argmax > s.cursor)
            throw CheckpointCorrupt("checkpoint argmax out of range");
    } else if (s.argmax != 0) {
        throw CheckpointCorrupt("checkpoint argmax before any candidate");
    }
    if (s.first_violation &&
        (*s.first_violation < 2 || *s.first_violation > s.cursor))
        throw CheckpointCorrupt("checkpoint first_violation out of range");
}

MertensScan parse_checkpoint_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointCorrupt(std::string("unparseable checkpoint record: ") +
                                e.what());
    }
    MertensScan s;
    try {
        s.cursor = j.at("cursor").get<uint64_t>();
        s.M = j.at("M").get<int64_t>();
        s.S_abs = uint128_from_string(j.at("S_abs").get<std::string>());
        s.max_ratio = j.at("max_ratio").get<double>();
        s.argmax = j.at("argmax").get<uint64_t>();
        if (j.contains("first_violation"))
            s.first_violation = j.at("first_violation").get<uint64_t>();
        std::string crc_hex = j.at("crc").get<std::string>();
        std::string canon = canonical_fields(s);
        if (hex8(crc32(canon)) != crc_hex)
            throw CheckpointCorrupt("checkpoint crc mismatch");
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointCorrupt(std::string("malformed checkpoint record: ") +
                                e.what());
    }
    validate_scan_invariants(s);
    // recover the exact numerator behind max_ratio and cross-check
    if (s.argmax != 0) {
        double root = std::sqrt(static_cast<double>(s.argmax));
        s.argmax_abs_m = static_cast<uint64_t>(std::llround(s.max_ratio * root));
        if (static_cast<double>(s.argmax_abs_m) / root != s.max_ratio)
            throw CheckpointCorrupt("checkpoint max_ratio inconsistent with argmax");
    } else if (s.max_ratio != 0.0) {
        throw CheckpointCorrupt("checkpoint max_ratio without argmax");
    }
    return s;
}

// Last resumable state in the file, or nullopt when the file is absent or
// holds no usable record.  A torn final line (no newline) is an interrupted
// write and is dropped; everything else must validate.
std::optional<MertensScan> load_checkpoint(const std::string& path,
                                           uint64_t limit, uint64_t seg_size) {
    std::ifstream in(path);
    if (!in.is_open()) return std::nullopt;
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::optional<MertensScan> best;
    uint64_t prev_cursor = 0;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break; // torn trailing line
        std::string line = content.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        MertensScan s = parse_checkpoint_line(line);
        if (s.cursor <= prev_cursor)
            throw CheckpointCorrupt("checkpoint cursors not increasing");
        prev_cursor = s.cursor;
        // resumable records: aligned with the current segmentation, or the
        // completed endpoint itself
        if ((s.cursor % seg_size == 0 || s.cursor == limit) &&
            s.cursor <= limit) {
            if (best && s.S_abs < best->S_abs)
                throw CheckpointCorrupt("checkpoint S_abs decreasing");
            s.limit = limit;
            best = s;
        }
    }
    return best;
}

} // namespace

std::string checkpoint_record(const MertensScan& s) {
    std::string canon = canonical_fields(s);
    return canon + ",\"crc\":\"" + hex8(crc32(canon)) + "\"}";
}

MertensScan mertens_scan(const MertensOptions& opt) {
    if (opt.limit < 2) throw DomainError("mertens_scan: limit must be >= 2");
    uint64_t K = opt.segment_size ? opt.segment_size : 1'000'000;
    std::optional<uint64_t> d_scaled;
    if (opt.verify_d) d_scaled = violation_scale_d(*opt.verify_d);

    MertensScan st;
    st.limit = opt.limit;
    uint64_t first_seg = 0;
    bool resumed = false;
    if (!opt.checkpoint_path.empty()) {
        auto loaded = load_checkpoint(opt.checkpoint_path, opt.limit, K);
        if (loaded) {
            st = *loaded;
            if (st.cursor >= opt.limit) return st; // already complete
            first_seg = st.cursor / K;
            resumed = true;
        }
    }

    std::ofstream ck;
    if (!opt.checkpoint_path.empty()) {
        ck.open(opt.checkpoint_path,
                resumed ? std::ios::app : std::ios::trunc);
        if (!ck.is_open())
            throw IoError("cannot open checkpoint file " + opt.checkpoint_path);
    }

    const uint64_t n_segs = (opt.limit + K - 1) / K; // segment k covers [1+kK, 1+(k+1)K)
    PrimeTable table = build_prime_table(isqrt_u64(opt.limit));

    auto seg_bounds = [&](uint64_t k, uint64_t& lo, uint64_t& hi) {
        lo = 1 + k * K;
        hi = std::min(1 + (k + 1) * K, opt.limit + 1);
    };

    unsigned hw = std::thread::hardware_concurrency();
    unsigned T = opt.threads ? opt.threads : (hw ? hw : 1);
    uint64_t remaining = n_segs > first_seg ? n_segs - first_seg : 1;
    T = static_cast<unsigned>(std::min<uint64_t>(T, remaining));

    auto emit_checkpoint = [&](const MertensScan& s) {
        if (!ck.is_open()) return;
        ck << checkpoint_record(s) << '\n';
        ck.flush();
    };

    if (T <= 1) {
        for (uint64_t k = first_seg; k < n_segs; ++k) {
            uint64_t lo, hi;
            seg_bounds(k, lo, hi);
            fold_segment(st, mobius_segment(lo, hi, table), d_scaled);
            emit_checkpoint(st);
        }
        return st;
    }

    // worker pool sieves segments out of order; a single in-order fold keeps
    // the aggregate deterministic
    std::mutex mx;
    std::condition_variable cv_done, cv_space;
    std::map<uint64_t, SieveSegment> ready;
    std::atomic<uint64_t> next_seg{first_seg};
    uint64_t fold_at = first_seg;
    const size_t window = static_cast<size_t>(T) * 4;
    std::exception_ptr worker_error;
    bool abort = false;

    auto worker = [&] {
        try {
            for (;;) {
                uint64_t k = next_seg.fetch_add(1);
                if (k >= n_segs) return;
                uint64_t lo, hi;
                seg_bounds(k, lo, hi);
                SieveSegment seg = mobius_segment(lo, hi, table);
                std::unique_lock<std::mutex> lk(mx);
                cv_space.wait(lk, [&] {
                    return abort || k < fold_at + window;
                });
                if (abort) return;
                ready.emplace(k, std::move(seg));
                cv_done.notify_all();
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(mx);
            if (!worker_error) worker_error = std::current_exception();
            abort = true;
            cv_done.notify_all();
            cv_space.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(T);
    for (unsigned i = 0; i < T; ++i) pool.emplace_back(worker);

    try {
        for (uint64_t k = first_seg; k < n_segs; ++k) {
            SieveSegment seg;
            {
                std::unique_lock<std::mutex> lk(mx);
                cv_done.wait(lk, [&] {
                    return abort || ready.count(k) != 0;
                });
                if (abort) break;
                seg = std::move(ready.at(k));
                ready.erase(k);
                fold_at = k + 1;
                cv_space.notify_all();
            }
            fold_segment(st, seg, d_scaled);
            emit_checkpoint(st);
        }
    } catch (...) {
        {
            std::lock_guard<std::mutex> lk(mx);
            abort = true;
        }
        cv_done.notify_all();
        cv_space.notify_all();
        for (auto& t : pool) t.join();
        throw;
    }
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);
    return st;
}

double mean_abs(const MertensScan& scan) {
    if (scan.cursor != scan.limit)
        throw DomainError("mean_abs: scan incomplete (cursor != limit)");
    return uint128_to_double(scan.S_abs) / static_cast<double>(scan.limit);
}

ExtReal pointwise_upper_mean(double d, const ExtReal& Y) {
    if (!(d > 0.0)) throw DomainError("pointwise_upper_mean: d must be > 0");
    if (ext_cmp(Y, ExtReal::one()) < 0)
        throw DomainError("pointwise_upper_mean: Y must be >= 1");
    return ext_mul(ext_from_double(2.0 * d / 3.0), ext_sqrt(Y));
}

} // namespace pintz
