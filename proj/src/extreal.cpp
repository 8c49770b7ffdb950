#include "extreal.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>

#include "errors.hpp"

namespace pintz {

namespace {

// opposite-sign additions closer than this in lnmag are uncertified
constexpr double kCancelThreshold = 1e-25;

const DD kLnMarginDown = dd_log(DD(1.0) - DD(1e-9)); // ln(1 - 1e-9)
const DD kLnMarginUp = dd_log(DD(1.0) + DD(1e-9));   // ln(1 + 1e-9)

} // namespace

ExtReal ext_from_double(double v) {
    if (v == 0.0) return ExtReal::zero();
    if (std::isnan(v)) throw DomainError("extreal: NaN input");
    if (std::isinf(v)) throw DomainError("extreal: infinite input");
    return {v < 0 ? -1 : +1, dd_log(DD(std::fabs(v)))};
}

ExtReal ext_from_dd(DD v) {
    if (v.is_zero()) return ExtReal::zero();
    return {v.is_negative() ? -1 : +1, dd_log(dd_abs(v))};
}

double ext_to_double(const ExtReal& x) {
    if (x.sign == 0) return 0.0;
    DD e = dd_exp(x.lnmag);
    double v = e.hi + e.lo;
    return x.sign < 0 ? -v : v;
}

ExtReal ext_mul(const ExtReal& a, const ExtReal& b) {
    if (a.sign == 0 || b.sign == 0) return ExtReal::zero();
    return {a.sign * b.sign, a.lnmag + b.lnmag};
}

ExtReal ext_div(const ExtReal& a, const ExtReal& b) {
    if (b.sign == 0) throw DomainError("extreal: division by zero");
    if (a.sign == 0) return ExtReal::zero();
    return {a.sign * b.sign, a.lnmag - b.lnmag};
}

ExtReal ext_neg(const ExtReal& a) { return {-a.sign, a.lnmag}; }

ExtReal ext_abs(const ExtReal& a) { return {a.sign == 0 ? 0 : 1, a.lnmag}; }

ExtReal ext_add(const ExtReal& a, const ExtReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;

    const ExtReal& big = (a.lnmag >= b.lnmag) ? a : b;
    const ExtReal& small = (a.lnmag >= b.lnmag) ? b : a;
    DD d = small.lnmag - big.lnmag; // <= 0

    if (a.sign == b.sign) {
        // ln(e^m + e^l) = m + ln(1 + e^(l-m))
        DD t = dd_exp(d);
        if (t.is_zero()) return big;
        return {big.sign, big.lnmag + dd_log(DD(1.0) + t)};
    }

    // opposite signs: ln|e^m - e^l| = m + ln(1 - e^(l-m))
    if (d.is_zero()) return ExtReal::zero();
    if (dd_abs(d).hi < kCancelThreshold)
        throw CancellationUnderflow(
            "extreal: opposite-sign magnitudes within 1e-25 in lnmag; "
            "relative error of the difference is uncertified");
    DD one_minus;
    if (d.hi <= -0.6931) {
        one_minus = DD(1.0) - dd_exp(d); // in [0.5, 1): no cancellation
    } else {
        one_minus = -dd_expm1(d);
    }
    return {big.sign, big.lnmag + dd_log(one_minus)};
}

ExtReal ext_pow(const ExtReal& a, DD r) {
    if (a.sign < 0) throw DomainError("extreal: pow of negative base");
    if (a.sign == 0) {
        if (r.hi > 0.0) return ExtReal::zero();
        throw DomainError("extreal: 0 raised to a nonpositive power");
    }
    if (r.is_zero()) return ExtReal::one();
    return {+1, a.lnmag * r};
}

ExtReal ext_sqrt(const ExtReal& a) { return ext_pow(a, DD(0.5)); }

int ext_cmp(const ExtReal& a, const ExtReal& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : +1;
    if (a.sign == 0) return 0;
    if (a.lnmag == b.lnmag) return 0;
    bool mag_less = a.lnmag < b.lnmag;
    if (a.sign > 0) return mag_less ? -1 : +1;
    return mag_less ? +1 : -1;
}

ExtReal margin_down(const ExtReal& x) {
    if (x.sign == 0) return x;
    return {x.sign, x.lnmag + (x.sign > 0 ? kLnMarginDown : kLnMarginUp)};
}

ExtReal margin_up(const ExtReal& x) {
    if (x.sign == 0) return x;
    return {x.sign, x.lnmag + (x.sign > 0 ? kLnMarginUp : kLnMarginDown)};
}

// ---- decimal I/O ----

std::string dd_to_string(DD x, int digits) {
    if (digits < 1) digits = 1;
    bool neg = x.is_negative();
    DD r = dd_abs(x);
    if (r.is_zero()) {
        std::string s = neg ? "-0." : "0.";
        s.append(static_cast<size_t>(digits - 1), '0');
        s += "e+00";
        return s;
    }

    int expn = static_cast<int>(std::floor(std::log10(std::fabs(r.hi))));
    if (expn >= 0)
        r = r / dd_pow10(expn);
    else
        r = r * dd_pow10(-expn);
    // one correction step in case log10 rounded the wrong way
    if (r.hi >= 10.0) {
        r = r / DD(10.0);
        ++expn;
    } else if (r.hi < 1.0) {
        r = r * DD(10.0);
        --expn;
    }

    const int n = digits;
    std::string dig(static_cast<size_t>(n) + 1, '0');
    for (int i = 0; i <= n; ++i) {
        int d = static_cast<int>(r.hi);
        r = (r - static_cast<double>(d)) * DD(10.0);
        dig[static_cast<size_t>(i)] = static_cast<char>('0' + d);
    }
    // fix transient borrows/carries from the digit extraction
    for (int i = n; i > 0; --i) {
        if (dig[static_cast<size_t>(i)] < '0') {
            dig[static_cast<size_t>(i)] += 10;
            dig[static_cast<size_t>(i - 1)] -= 1;
        } else if (dig[static_cast<size_t>(i)] > '9') {
            dig[static_cast<size_t>(i)] -= 10;
            dig[static_cast<size_t>(i - 1)] += 1;
        }
    }
    // round on the guard digit
    if (dig[static_cast<size_t>(n)] >= '5') {
        int i = n - 1;
        dig[static_cast<size_t>(i)] += 1;
        while (i > 0 && dig[static_cast<size_t>(i)] > '9') {
            dig[static_cast<size_t>(i)] -= 10;
            dig[static_cast<size_t>(i - 1)] += 1;
            --i;
        }
    }
    if (dig[0] > '9') { // rounding overflowed into a new leading digit
        ++expn;
        dig[0] = '1';
        for (int i = 1; i < n; ++i) dig[static_cast<size_t>(i)] = '0';
    }

    std::string s;
    if (neg) s += '-';
    s += dig[0];
    s += '.';
    s.append(dig, 1, static_cast<size_t>(n - 1));
    char ebuf[16];
    std::snprintf(ebuf, sizeof ebuf, "e%+03d", expn);
    s += ebuf;
    return s;
}

namespace {

struct ParsedDecimal {
    bool neg = false;
    std::string digits;  // significand digits, no dot
    long long exp10 = 0; // value = digits * 10^(exp10 - (len-1)) style below
    long long frac_digits = 0;
};

ParsedDecimal parse_decimal_text(const std::string& text) {
    ParsedDecimal out;
    size_t i = 0;
    const size_t n = text.size();
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        out.neg = text[i] == '-';
        ++i;
    }
    bool any = false, dot = false;
    for (; i < n; ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            out.digits += c;
            if (dot) ++out.frac_digits;
            any = true;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!any) throw UsageError("not a decimal number: '" + text + "'");
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= n) throw UsageError("truncated exponent in '" + text + "'");
        long long e = 0;
        for (; i < n; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw UsageError("bad exponent in '" + text + "'");
            e = e * 10 + (text[i] - '0');
            if (e > 1000000000LL) throw UsageError("exponent out of range");
        }
        out.exp10 = eneg ? -e : e;
    }
    if (i != n) throw UsageError("trailing characters in number '" + text + "'");
    return out;
}

// significand as a double-double plus the power-of-ten scale
void decimal_to_parts(const ParsedDecimal& p, DD& mant, long long& scale,
                      bool& is_zero) {
    mant = DD(0.0);
    int used = 0;
    long long dropped = 0;
    for (char c : p.digits) {
        if (used < 36) {
            mant = mant * DD(10.0) + static_cast<double>(c - '0');
            ++used;
        } else {
            ++dropped;
        }
    }
    is_zero = mant.is_zero();
    scale = p.exp10 - p.frac_digits + dropped;
}

} // namespace

DD dd_from_string(const std::string& text) {
    ParsedDecimal p = parse_decimal_text(text);
    DD mant;
    long long scale;
    bool zero;
    decimal_to_parts(p, mant, scale, zero);
    if (zero) return DD(0.0);
    DD v = mant;
    if (scale > 0)
        v = v * dd_pow10(scale);
    else if (scale < 0)
        v = v / dd_pow10(-scale);
    return p.neg ? -v : v;
}

std::string ext_serialize(const ExtReal& x) {
    if (x.sign == 0) return "s:0";
    std::string s = x.sign > 0 ? "s:+|ln:" : "s:-|ln:";
    s += dd_to_string(x.lnmag, 32);
    return s;
}

ExtReal ext_parse(const std::string& text) {
    if (text.empty()) throw UsageError("empty numeric value");
    if (text == "s:0") return ExtReal::zero();
    if (text.rfind("s:+|ln:", 0) == 0)
        return ExtReal::from_ln(dd_from_string(text.substr(7)), +1);
    if (text.rfind("s:-|ln:", 0) == 0)
        return ExtReal::from_ln(dd_from_string(text.substr(7)), -1);
    if (text.rfind("exp:", 0) == 0)
        return ExtReal::from_ln(dd_from_string(text.substr(4)), +1);

    // plain decimal: build ln(value) without materializing the value, so
    // inputs like 1e500 are fine
    ParsedDecimal p = parse_decimal_text(text);
    DD mant;
    long long scale;
    bool zero;
    decimal_to_parts(p, mant, scale, zero);
    if (zero) return ExtReal::zero();
    DD ln = dd_log(mant) + DD_LN10 * static_cast<double>(scale);
    return {p.neg ? -1 : +1, ln};
}

} // namespace pintz
