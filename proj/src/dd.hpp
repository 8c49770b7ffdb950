// Double-double arithmetic: an unevaluated pair of doubles giving ~32
// significant decimal digits.  The basic error-free transformations follow
// M. Joldes et al., ACM Trans. Math. Softw. 44 (2018); exp/log use the
// classic reduce-and-square scheme from the QD library.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace pintz {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double x) : hi(x), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    bool is_zero() const { return hi == 0.0; }
    bool is_negative() const { return hi < 0.0 || (hi == 0.0 && lo < 0.0); }

    // The pair is normalized (|lo| <= ulp(hi)/2), so hi alone is the
    // correctly rounded double value.
    double to_double() const { return hi; }
};

namespace detail {

inline DD quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return DD(s, b - (s - a));
}

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return DD(s, (a - (s - bb)) + (b - bb));
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return DD(p, std::fma(a, b, -p));
}

} // namespace detail

inline DD operator+(DD x, DD y) {
    DD s = detail::two_sum(x.hi, y.hi);
    DD t = detail::two_sum(x.lo, y.lo);
    double c = s.lo + t.hi;
    DD v = detail::quick_two_sum(s.hi, c);
    double w = t.lo + v.lo;
    return detail::quick_two_sum(v.hi, w);
}

inline DD operator+(DD x, double y) { return x + DD(y); }
inline DD operator+(double x, DD y) { return DD(x) + y; }

inline DD operator-(DD x) { return DD(-x.hi, -x.lo); }
inline DD operator-(DD x, DD y) { return x + (-y); }
inline DD operator-(DD x, double y) { return x + (-y); }
inline DD operator-(double x, DD y) { return DD(x) + (-y); }

inline DD operator*(DD x, DD y) {
    DD c = detail::two_prod(x.hi, y.hi);
    double t = x.hi * y.lo;
    t = std::fma(x.lo, y.hi, t);
    double cl = c.lo + t;
    return detail::quick_two_sum(c.hi, cl);
}

inline DD operator*(DD x, double y) { return x * DD(y); }
inline DD operator*(double x, DD y) { return DD(x) * y; }

inline DD operator/(DD x, DD y) {
    double q1 = x.hi / y.hi;
    DD r = x - y * q1;
    double q2 = r.hi / y.hi;
    r = r - y * q2;
    double q3 = r.hi / y.hi;
    DD q = detail::quick_two_sum(q1, q2);
    return q + q3;
}

inline DD operator/(DD x, double y) { return x / DD(y); }
inline DD operator/(double x, DD y) { return DD(x) / y; }

inline DD& operator+=(DD& x, DD y) { return x = x + y; }
inline DD& operator-=(DD& x, DD y) { return x = x - y; }
inline DD& operator*=(DD& x, DD y) { return x = x * y; }
inline DD& operator/=(DD& x, DD y) { return x = x / y; }

inline bool operator==(DD x, DD y) { return x.hi == y.hi && x.lo == y.lo; }
inline bool operator!=(DD x, DD y) { return !(x == y); }
inline bool operator<(DD x, DD y) {
    return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}
inline bool operator>(DD x, DD y) { return y < x; }
inline bool operator<=(DD x, DD y) { return !(y < x); }
inline bool operator>=(DD x, DD y) { return !(x < y); }

inline DD dd_abs(DD x) { return x.is_negative() ? -x : x; }

// exact scaling by a power of two
inline DD dd_ldexp(DD x, int n) {
    return DD(std::ldexp(x.hi, n), std::ldexp(x.lo, n));
}

inline DD dd_mul_pwr2(DD x, double p) { return DD(x.hi * p, x.lo * p); }

inline constexpr DD DD_LN2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DD DD_LN10{2.302585092994046, -2.1707562233822494e-16};
inline constexpr DD DD_PI{3.141592653589793, 1.2246467991473532e-16};
inline constexpr double DD_EPS = 4.93038065763132e-32; // 2^-104

// exp(x) with ~full double-double accuracy.  Saturates to 0 / +inf once the
// result leaves the double-double range.
inline DD dd_exp(DD a) {
    constexpr double k = 512.0;
    constexpr double inv_k = 1.0 / k;
    // 1/3!, 1/4!, ... as double-double pairs
    static constexpr DD inv_fact[15] = {
        {0.16666666666666666, 9.25185853854297e-18},
        {0.041666666666666664, 2.3129646346357427e-18},
        {0.008333333333333333, 1.1564823173178714e-19},
        {0.001388888888888889, -5.300543954373577e-20},
        {0.0001984126984126984, 1.7209558293420705e-22},
        {2.48015873015873e-05, 2.1511947866775882e-23},
        {2.7557319223985893e-06, -1.858393274046472e-22},
        {2.755731922398589e-07, 2.3767714622250297e-23},
        {2.505210838544172e-08, -1.448814070935912e-24},
        {2.08767569878681e-09, -1.20734505911326e-25},
        {1.6059043836821613e-10, 1.2585294588752098e-26},
        {1.1470745597729725e-11, 2.0655512752830745e-28},
        {7.647163731819816e-13, 7.03872877733453e-30},
        {4.779477332387385e-14, 4.399205485834081e-31},
        {2.8114572543455206e-15, 1.6508842730861433e-31}};

    if (a.hi <= -709.0) return DD(0.0);
    if (a.hi >= 709.0) return DD(std::numeric_limits<double>::infinity());
    if (a.is_zero()) return DD(1.0);

    double m = std::floor(a.hi / DD_LN2.hi + 0.5);
    DD r = dd_mul_pwr2(a - DD_LN2 * m, inv_k);

    DD p = r * r;
    DD s = r + dd_mul_pwr2(p, 0.5);
    p = p * r;
    DD t = p * inv_fact[0];
    int i = 0;
    const double thresh = inv_k * DD_EPS;
    do {
        s = s + t;
        p = p * r;
        ++i;
        t = p * inv_fact[i];
    } while (std::fabs(t.hi) > thresh && i < 14);
    s = s + t;

    for (int j = 0; j < 9; ++j) s = dd_mul_pwr2(s, 2.0) + s * s;
    s = s + 1.0;
    return dd_ldexp(s, static_cast<int>(m));
}

// log(x) for x > 0 via one double-double Newton step on a frexp-normalized
// mantissa, so sub-normal and near-overflow inputs are safe.
inline DD dd_log(DD a) {
    if (a.hi <= 0.0)
        return DD(std::numeric_limits<double>::quiet_NaN());
    if (a.hi == 1.0 && a.lo == 0.0) return DD(0.0);

    int e2 = 0;
    (void)std::frexp(a.hi, &e2);
    DD mant = dd_ldexp(a, -e2); // in [0.5, 1) up to the lo part

    DD y(std::log(mant.hi));
    y = y + mant * dd_exp(-y) - 1.0;
    return y + DD_LN2 * static_cast<double>(e2);
}

// expm1(x) for |x| <= ~0.75 by direct Taylor summation.
inline DD dd_expm1(DD a) {
    if (a.is_zero()) return DD(0.0);
    DD term = a;
    DD sum = a;
    for (int n = 2; n < 40; ++n) {
        term = term * a / static_cast<double>(n);
        sum = sum + term;
        if (std::fabs(term.hi) <= DD_EPS * std::fabs(sum.hi)) break;
    }
    return sum;
}

// integer power of a double-double by binary exponentiation
inline DD dd_powi(DD base, long long n) {
    if (n == 0) return DD(1.0);
    bool inv = n < 0;
    unsigned long long e = inv ? -static_cast<unsigned long long>(n) : n;
    DD acc(1.0), b = base;
    while (e) {
        if (e & 1ULL) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return inv ? DD(1.0) / acc : acc;
}

inline DD dd_pow10(long long n) { return dd_powi(DD(10.0), n); }

} // namespace pintz
