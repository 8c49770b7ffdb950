#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "extreal.hpp"
#include "oracles.hpp"

using namespace pintz;

namespace {

double lnmag_diff(const ExtReal& a, const ExtReal& b) {
    DD d = a.lnmag - b.lnmag;
    return std::fabs(d.hi + d.lo);
}

// log-uniform double in [1e-300, 1e300], either sign
double random_value(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ue(-300.0, 300.0);
    std::uniform_real_distribution<double> um(1.0, 10.0);
    double v = um(rng) * std::pow(10.0, ue(rng));
    return (rng() & 1) ? v : -v;
}

} // namespace

TEST_CASE("extreal round trip is exact for doubles") {
    std::mt19937_64 rng(20240517);
    for (int i = 0; i < 20000; ++i) {
        double v = random_value(rng);
        CHECK(ext_to_double(ext_from_double(v)) == v);
    }
    CHECK(ext_from_double(0.0).sign == 0);
    CHECK(ext_to_double(ExtReal::zero()) == 0.0);
}

TEST_CASE("ext_mul: log addition") {
    ExtReal six = ext_mul(ext_from_double(2.0), ext_from_double(3.0));
    CHECK(six.sign == 1);
    CHECK(ext_to_double(six) == 6.0);

    // sqrt(Y) * sqrt(Y) = Y at log Y = 1e19
    ExtReal half = ExtReal::from_ln(DD(5e18));
    ExtReal full = ext_mul(half, half);
    CHECK(full.lnmag == DD(1e19));

    CHECK(ext_mul(ExtReal::zero(), half).sign == 0);
    CHECK(ext_mul(half, ExtReal::zero()).sign == 0);
}

TEST_CASE("ext_add: log-sum-exp anchoring") {
    // 1 + 1 = 2
    ExtReal two = ext_add(ExtReal::one(), ExtReal::one());
    CHECK(lnmag_diff(two, ext_from_double(2.0)) < 1e-30);

    // exact cancellation
    ExtReal z = ext_add(ExtReal::from_ln(DD(100.0)),
                        ExtReal::from_ln(DD(100.0), -1));
    CHECK(z.sign == 0);

    // e^10 - e^5, against the frozen 40-digit evaluation
    ExtReal diff = ext_add(ExtReal::from_ln(DD(10.0)),
                           ExtReal::from_ln(DD(5.0), -1));
    DD expected = dd_from_string(oracle::kLnE10MinusE5);
    CHECK(std::fabs((diff.lnmag - expected).hi) < 1e-28);

    // adding zero is the identity
    ExtReal x = ext_from_double(-3.25);
    CHECK(ext_cmp(ext_add(x, ExtReal::zero()), x) == 0);
}

TEST_CASE("ext_add: cancellation underflow is reported") {
    ExtReal a = ExtReal::from_ln(DD(1.0));
    ExtReal b{-1, DD(1.0, 1e-26)};
    CHECK_THROWS_AS(ext_add(a, b), CancellationUnderflow);
    // same signs at the same distance are fine
    ExtReal c{+1, DD(1.0, 1e-26)};
    CHECK_NOTHROW(ext_add(a, c));
}

TEST_CASE("ext_pow") {
    ExtReal two = ext_pow(ext_from_double(4.0), DD(0.5));
    CHECK(ext_to_double(two) == doctest::Approx(2.0).epsilon(1e-15));

    ExtReal y = ext_pow(ExtReal::from_ln(DD(1e19)), DD(0.51));
    CHECK((y.lnmag.hi + y.lnmag.lo) == doctest::Approx(5.1e18).epsilon(1e-15));

    CHECK(ext_cmp(ext_pow(ExtReal::from_ln(DD(123.0)), DD(0.0)),
                  ExtReal::one()) == 0);
    CHECK(ext_pow(ExtReal::zero(), DD(2.0)).sign == 0);
    CHECK_THROWS_AS(ext_pow(ext_from_double(-2.0), DD(0.5)), DomainError);
    CHECK_THROWS_AS(ext_pow(ExtReal::zero(), DD(0.0)), DomainError);
}

TEST_CASE("ext_cmp total order") {
    CHECK(ext_cmp(ExtReal::from_ln(DD(5.0)), ExtReal::from_ln(DD(3.0))) == 1);
    CHECK(ext_cmp(ExtReal::from_ln(DD(100.0), -1),
                  ExtReal::from_ln(DD(-100.0))) == -1);
    // exponent dominance: e^(0.51e19) * 14.1 > e^(0.5e19)
    ExtReal big = ExtReal::from_ln(DD(0.51e19) + dd_log(DD(14.1)));
    ExtReal small = ExtReal::from_ln(DD(0.5e19));
    CHECK(ext_cmp(big, small) == 1);
    CHECK(ext_cmp(small, big) == -1);
    CHECK(ext_cmp(big, big) == 0);
}

TEST_CASE("property: mul/add track double arithmetic to 2 ulp") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ue(-150.0, 150.0);
    std::uniform_real_distribution<double> um(1.0, 10.0);
    for (int i = 0; i < 5000; ++i) {
        double a = um(rng) * std::pow(10.0, ue(rng));
        double b = um(rng) * std::pow(10.0, ue(rng));
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        double prod = ext_to_double(ext_mul(ext_from_double(a), ext_from_double(b)));
        double want = a * b;
        CHECK(std::fabs(prod - want) <=
              2.0 * std::fabs(want) * std::numeric_limits<double>::epsilon());
        double sum = ext_to_double(ext_add(ext_from_double(a), ext_from_double(b)));
        double wsum = a + b;
        if (wsum != 0.0 && std::fabs(wsum) >
                               1e-9 * std::max(std::fabs(a), std::fabs(b)))
            CHECK(std::fabs(sum - wsum) <=
                  2.0 * std::fabs(wsum) * std::numeric_limits<double>::epsilon());
    }
}

TEST_CASE("property: cmp is antisymmetric and transitive") {
    std::mt19937_64 rng(11);
    auto gen = [&] {
        std::uniform_real_distribution<double> u(-50.0, 50.0);
        int s = static_cast<int>(rng() % 3) - 1;
        return ExtReal{s, DD(u(rng))};
    };
    for (int i = 0; i < 3000; ++i) {
        ExtReal a = gen(), b = gen(), c = gen();
        CHECK(ext_cmp(a, b) == -ext_cmp(b, a));
        if (ext_cmp(a, b) <= 0 && ext_cmp(b, c) <= 0) CHECK(ext_cmp(a, c) <= 0);
    }
}

TEST_CASE("property: pow inverse to 1e-25 relative in lnmag") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ur(0.01, 100.0);
    std::uniform_real_distribution<double> ul(-1e18, 1e18);
    for (int i = 0; i < 2000; ++i) {
        double r = ur(rng);
        ExtReal a = ExtReal::from_ln(DD(ul(rng)));
        if (a.lnmag.is_zero()) continue;
        DD inv = DD(1.0) / DD(r);
        ExtReal back = ext_pow(ext_pow(a, DD(r)), inv);
        DD rel = (back.lnmag - a.lnmag) / a.lnmag;
        CHECK(std::fabs(rel.hi) < 1e-25);
    }
}

TEST_CASE("lnmag near 1e20 keeps absolute error below 1e-5") {
    // serialization resolution at 32 significant digits: ~1e-12 absolute here
    ExtReal x = ExtReal::from_ln(DD(1e20) + DD(0.125));
    ExtReal y = ext_parse(ext_serialize(x));
    CHECK(std::fabs((y.lnmag - x.lnmag).hi) < 1e-5);
    // and arithmetic at that scale: (e^1e20)^(1/4) * (e^1e20)^(3/4) = e^1e20
    ExtReal a = ext_pow(x, DD(0.25)), b = ext_pow(x, DD(0.75));
    CHECK(std::fabs((ext_mul(a, b).lnmag - x.lnmag).hi) < 1e-5);
}

TEST_CASE("serialization format") {
    CHECK(ext_serialize(ExtReal::zero()) == "s:0");
    std::string s = ext_serialize(ext_from_double(-2.0));
    CHECK(s.substr(0, 7) == "s:-|ln:");
    ExtReal back = ext_parse(s);
    CHECK(back.sign == -1);
    CHECK(ext_to_double(back) == doctest::Approx(-2.0).epsilon(1e-15));

    CHECK(ext_parse("s:0").sign == 0);
    CHECK_THROWS_AS(ext_parse("pineapple"), UsageError);
    CHECK_THROWS_AS(ext_parse(""), UsageError);
    CHECK_THROWS_AS(ext_parse("1e"), UsageError);
}

TEST_CASE("parsing decimals and exp: forms") {
    ExtReal y = ext_parse("1e20");
    CHECK(std::fabs((y.lnmag - DD(20.0) * DD_LN10).hi) < 1e-28);
    ExtReal e19 = ext_parse("exp:1e19");
    CHECK(e19.lnmag == DD(1e19));
    CHECK(ext_to_double(ext_parse("-3.25")) == -3.25);
    CHECK(ext_to_double(ext_parse("0")) == 0.0);
    // beyond double range still representable
    ExtReal huge = ext_parse("1e500");
    CHECK(std::fabs((huge.lnmag.hi + huge.lnmag.lo) - 500 * 2.302585092994046) <
          1e-9);
    CHECK(std::isinf(ext_to_double(huge))); // saturates
}

TEST_CASE("ext_div and invalid inputs") {
    ExtReal q = ext_div(ext_from_double(15.0), ext_from_double(-3.0));
    CHECK(ext_to_double(q) == doctest::Approx(-5.0).epsilon(1e-15));
    CHECK(ext_div(ExtReal::zero(), ext_from_double(2.0)).sign == 0);
    CHECK_THROWS_AS(ext_div(ext_from_double(1.0), ExtReal::zero()), DomainError);
    CHECK_THROWS_AS(ext_from_double(std::nan("")), DomainError);
    CHECK_THROWS_AS(ext_from_double(HUGE_VAL), DomainError);
}

TEST_CASE("property: decimal rendering round-trips to 1e-30 relative") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1e19, 1e19);
    for (int i = 0; i < 2000; ++i) {
        DD x(u(rng), u(rng) * 1e-18);
        DD back = dd_from_string(dd_to_string(x, 32));
        DD rel = (back - x) / x;
        CHECK(std::fabs(rel.hi) < 1e-30);
    }
    // all-nines rounding bumps the exponent cleanly
    DD nines = DD(1.0) - DD(1e-33);
    CHECK(dd_to_string(nines, 16) == "1.000000000000000e+00");
}

TEST_CASE("directed margins") {
    ExtReal x = ext_from_double(100.0);
    CHECK(ext_cmp(margin_down(x), x) == -1);
    CHECK(ext_cmp(margin_up(x), x) == 1);
    ExtReal n = ext_from_double(-100.0);
    CHECK(ext_cmp(margin_down(n), n) == -1);
    CHECK(ext_cmp(margin_up(n), n) == 1);
    CHECK(margin_down(ExtReal::zero()).sign == 0);
    // the margin is 1e-9 relative
    double v = ext_to_double(margin_down(x));
    CHECK(v == doctest::Approx(100.0 * (1 - 1e-9)).epsilon(1e-13));
}
