#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "mobius.hpp"
#include "oracles.hpp"

using namespace pintz;

namespace {

MertensScan run(uint64_t limit, uint64_t seg, unsigned threads,
                std::optional<double> d = {}, std::string ck = {}) {
    MertensOptions o;
    o.limit = limit;
    o.segment_size = seg;
    o.threads = threads;
    o.verify_d = d;
    o.checkpoint_path = std::move(ck);
    return mertens_scan(o);
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("mobius_segment matches trial division") {
    PrimeTable table = build_prime_table(1000);
    SieveSegment seg = mobius_segment(1, 1001, table);
    CHECK(seg.mu[0] == 1);      // mu(1)
    CHECK(seg.mu[3] == 0);      // mu(4)
    CHECK(seg.mu[29] == -1);    // mu(30) = mu(2*3*5)
    for (uint64_t n = 1; n <= 1000; ++n)
        CHECK(seg.mu[n - 1] == oracle::mu_trial(n));

    // a high window, against trial division
    SieveSegment far = mobius_segment(99000, 100001, build_prime_table(317));
    for (uint64_t n = 99000; n <= 100000; ++n)
        CHECK(far.mu[n - far.lo] == oracle::mu_trial(n));
}

TEST_CASE("mobius_segment rejects an insufficient prime table") {
    PrimeTable small = build_prime_table(10);
    CHECK_THROWS_AS(mobius_segment(1, 1000, small), IncompletePrimes);
    CHECK_THROWS_AS(mobius_segment(5, 1, build_prime_table(100)), DomainError);
}

TEST_CASE("sum over divisors of mu is the unit function") {
    const uint64_t N = 10000;
    PrimeTable table = build_prime_table(100);
    SieveSegment seg = mobius_segment(1, N + 1, table);
    std::vector<int64_t> divsum(N + 1, 0);
    for (uint64_t d = 1; d <= N; ++d)
        for (uint64_t m = d; m <= N; m += d) divsum[m] += seg.mu[d - 1];
    CHECK(divsum[1] == 1);
    for (uint64_t n = 2; n <= N; ++n) CHECK(divsum[n] == 0);
}

TEST_CASE("mertens_scan: small exact aggregates") {
    MertensScan s = run(10, 3, 1);
    CHECK(s.M == -1);
    CHECK(uint128_to_string(s.S_abs) == "12");
    CHECK(s.argmax == 5);
    CHECK(s.max_ratio == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(mean_abs(s) == doctest::Approx(1.2));

    MertensScan s2 = run(2, 10, 1);
    CHECK(mean_abs(s2) == doctest::Approx(0.5));

    CHECK_THROWS_AS(run(1, 10, 1), DomainError);
}

TEST_CASE("mertens_scan matches trial division through 1e5") {
    const uint64_t N = 100000;
    PrimeTable table = build_prime_table(317);
    SieveSegment seg = mobius_segment(1, N + 1, table);
    int64_t m = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        CHECK(seg.mu[n - 1] == oracle::mu_trial(n));
        m += seg.mu[n - 1];
    }
    MertensScan s = run(N, 8192, 2);
    CHECK(s.M == m);
}

TEST_CASE("mertens_scan: dual-sieve oracle at 1e4 and 1e6") {
    MertensScan s4 = run(10000, 1000, 2);
    CHECK(s4.M == oracle::kMertens1e4);
    CHECK(uint128_to_string(s4.S_abs) == std::to_string(oracle::kSumAbs1e4));

    // independent straight-line recomputation with the linear sieve
    auto mu = oracle::mu_linear_sieve(1000000);
    int64_t m = 0;
    uint64_t s_abs = 0;
    for (uint64_t n = 1; n <= 1000000; ++n) {
        if (n > 1) s_abs += static_cast<uint64_t>(m < 0 ? -m : m);
        m += mu[n];
    }
    CHECK(m == oracle::kMertens1e6);
    CHECK(s_abs == oracle::kSumAbs1e6);

    MertensScan s6 = run(1000000, 65536, 4);
    CHECK(s6.M == m);
    CHECK(uint128_to_string(s6.S_abs) == std::to_string(s_abs));
    CHECK(mean_abs(s6) ==
          doctest::Approx(static_cast<double>(s_abs) / 1e6).epsilon(1e-12));
}

TEST_CASE("segment independence") {
    MertensScan a = run(30000, 1000, 2);
    MertensScan b = run(30000, 1000000, 2);
    CHECK(a == b);
}

TEST_CASE("parallel determinism") {
    MertensScan a = run(200000, 4096, 1, 0.5);
    MertensScan b = run(200000, 4096, 7, 0.5);
    CHECK(a == b);
}

TEST_CASE("violation predicate: exact ties are not violations") {
    // d = 0.5 scales to D = 500000; M = 1, n = 4 gives exact equality
    uint64_t D = violation_scale_d(0.5);
    CHECK(D == 500000);
    CHECK(!violates_pointwise_bound(1, 4, D));
    CHECK(!violates_pointwise_bound(-1, 4, D));
    CHECK(violates_pointwise_bound(1, 3, D));
    CHECK(violation_scale_d(0.571) == 571000);
    CHECK_THROWS_AS(violation_scale_d(0.0), DomainError);
}

TEST_CASE("first_violation: smallest n >= 2") {
    MertensScan s = run(100, 7, 1, 0.5);
    REQUIRE(s.first_violation.has_value());
    CHECK(*s.first_violation == 3); // |M(3)| = 1 > 0.5 sqrt(3)
    MertensScan ok = run(100, 7, 1, 1.0);
    CHECK(!ok.first_violation.has_value());
}

TEST_CASE("checkpoint: resume is bit-identical") {
    TempFile ck("pintz_test_ck.jsonl");
    MertensScan full = run(50000, 2048, 2, 0.5, ck.path);
    REQUIRE(full.first_violation.has_value());

    // keep only the first k records, as if interrupted, then resume
    for (size_t keep : {1u, 5u, 11u}) {
        std::ifstream in(ck.path);
        std::string line, prefix;
        size_t count = 0;
        while (count < keep && std::getline(in, line)) {
            prefix += line + "\n";
            ++count;
        }
        in.close();
        TempFile part("pintz_test_ck_part.jsonl");
        std::ofstream(part.path) << prefix;
        MertensScan resumed = run(50000, 2048, 2, 0.5, part.path);
        CHECK(resumed == full);
    }
}

TEST_CASE("checkpoint: torn trailing line is dropped, corruption rejected") {
    TempFile ck("pintz_test_ck2.jsonl");
    MertensScan full = run(20000, 1024, 1, {}, ck.path);

    // torn final line (no newline): interrupted write, resume still works
    std::string content;
    {
        std::ifstream in(ck.path);
        content.assign(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
    }
    TempFile torn("pintz_test_ck_torn.jsonl");
    std::ofstream(torn.path) << content.substr(0, content.size() - 7);
    CHECK(run(20000, 1024, 1, {}, torn.path) == full);

    // flipped digit inside a complete record: crc mismatch
    std::string bad = content;
    size_t pos = bad.find("\"M\":");
    REQUIRE(pos != std::string::npos);
    bad[pos + 4] = (bad[pos + 4] == '1') ? '2' : '1';
    TempFile corrupt("pintz_test_ck_bad.jsonl");
    std::ofstream(corrupt.path) << bad;
    CHECK_THROWS_AS(run(20000, 1024, 1, {}, corrupt.path), CheckpointCorrupt);
}

TEST_CASE("checkpoint: re-running a completed scan is a no-op") {
    // limit not a multiple of the segment size, so the final record is
    // unaligned; a second run must return the stored state without
    // appending a non-increasing record
    TempFile ck("pintz_test_ck3.jsonl");
    MertensScan full = run(10000, 3000, 1, {}, ck.path);
    auto file_size = std::filesystem::file_size(ck.path);
    MertensScan again = run(10000, 3000, 1, {}, ck.path);
    CHECK(again == full);
    CHECK(std::filesystem::file_size(ck.path) == file_size);
    MertensScan third = run(10000, 3000, 2, {}, ck.path);
    CHECK(third == full);
}

TEST_CASE("checkpoint record format") {
    MertensScan s = run(10, 5, 1);
    std::string rec = checkpoint_record(s);
    CHECK(rec.find("\"cursor\":10") != std::string::npos);
    CHECK(rec.find("\"S_abs\":\"12\"") != std::string::npos);
    CHECK(rec.find("\"crc\":\"") != std::string::npos);
    CHECK(rec.back() == '}');
}

TEST_CASE("pointwise_upper_mean") {
    // d = 0.571, Y = 4 -> 0.571 * (2/3) * 2
    ExtReal u = pointwise_upper_mean(0.571, ext_from_double(4.0));
    CHECK(ext_to_double(u) ==
          doctest::Approx(0.571 * 2.0 / 3.0 * 2.0).epsilon(1e-14));

    // d = 1, Y = 1e80 -> (2/3) 1e40; the 2d/3 factor is a double input
    ExtReal u2 = pointwise_upper_mean(1.0, ext_parse("1e80"));
    DD want = dd_log(DD(2.0 / 3.0)) + DD(40.0) * DD_LN10;
    CHECK(std::fabs((u2.lnmag - want).hi) < 1e-25);

    // log-space instance: d = 1, Y = exp(1e19)
    ExtReal u3 = pointwise_upper_mean(1.0, ext_parse("exp:1e19"));
    DD want3 = dd_log(DD(2.0 / 3.0)) + DD(5e18);
    CHECK(std::fabs((u3.lnmag - want3).hi) < 1e-12);

    CHECK_THROWS_AS(pointwise_upper_mean(0.0, ext_from_double(4.0)), DomainError);
    CHECK_THROWS_AS(pointwise_upper_mean(1.0, ext_from_double(0.5)), DomainError);
}

TEST_CASE("mean_abs requires a complete scan") {
    MertensScan s = run(10, 3, 1);
    s.cursor = 9; // simulate incomplete state
    CHECK_THROWS_AS(mean_abs(s), DomainError);
}
