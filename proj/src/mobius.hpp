// Segmented Mobius sieve and the streaming Mertens aggregate: M(n), the
// exact integral of |M| (a step-function sum), the running max of
// |M(n)|/sqrt(n), and pointwise-bound verification, with resumable
// JSON-lines checkpoints.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extreal.hpp"

namespace pintz {

using uint128 = unsigned __int128;

std::string uint128_to_string(uint128 v);

struct PrimeTable {
    uint64_t limit = 0; // complete for all primes <= limit
    std::vector<uint32_t> primes;
};

PrimeTable build_prime_table(uint64_t limit);

struct SieveSegment {
    uint64_t lo = 0, hi = 0;    // half-open [lo, hi)
    std::vector<int8_t> mu;     // mu[n - lo]
};

// Exact mu values on [lo, hi); the table must cover primes up to
// sqrt(hi - 1) or IncompletePrimes is thrown.
SieveSegment mobius_segment(uint64_t lo, uint64_t hi, const PrimeTable& table);

struct MertensScan {
    uint64_t limit = 0;
    uint64_t cursor = 0; // largest n fully processed
    int64_t M = 0;       // M(cursor)
    uint128 S_abs = 0;   // sum_{n=1}^{cursor-1} |M(n)| = integral of |M| on [1, cursor]
    double max_ratio = 0.0;
    uint64_t argmax = 0; // smallest n >= 2 attaining max_ratio
    std::optional<uint64_t> first_violation;

    // exact state behind max_ratio (|M(argmax)|), kept so the running
    // comparison never goes through floating point
    uint64_t argmax_abs_m = 0;

    bool operator==(const MertensScan&) const = default;
};

struct MertensOptions {
    uint64_t limit = 0;
    uint64_t segment_size = 1'000'000;
    unsigned threads = 0; // 0 = hardware concurrency
    std::optional<double> verify_d;
    std::string checkpoint_path; // empty = no checkpointing
};

// Runs (or resumes) the scan to cursor == limit.
MertensScan mertens_scan(const MertensOptions& opt);

// Exact mean of |M| over [1, limit]; requires a completed scan.
double mean_abs(const MertensScan& scan);

// (2d/3) sqrt(Y): the mean-value ceiling implied by |M(x)| <= d sqrt(x).
ExtReal pointwise_upper_mean(double d, const ExtReal& Y);

// d scaled to an integer with 6 decimal digits, for the exact violation test
uint64_t violation_scale_d(double d);
// exact predicate |M| > d sqrt(n), decided as M^2 * 10^12 > D^2 * n
bool violates_pointwise_bound(int64_t m, uint64_t n, uint64_t d_scaled);

// one checkpoint line, exposed for tests
std::string checkpoint_record(const MertensScan& s);

} // namespace pintz
