// Extended log-space reals: sign plus a double-double natural log of the
// magnitude, so quantities like Y^beta0 with log Y = 1e19 stay representable
// and comparable with ~32 significant digits in the exponent.
#pragma once

#include <string>

#include "dd.hpp"

namespace pintz {

struct ExtReal {
    int sign = 0; // -1, 0, +1; lnmag is ignored when sign == 0
    DD lnmag{};

    static ExtReal zero() { return {}; }
    static ExtReal one() { return {+1, DD(0.0)}; }
    // value with the given natural-log magnitude
    static ExtReal from_ln(DD ln, int sign = +1) { return {sign, ln}; }

    bool is_zero() const { return sign == 0; }
};

ExtReal ext_from_double(double v);
// Value of a double-double (not its log).
ExtReal ext_from_dd(DD v);
// Saturates to +-inf / 0 when the value leaves the double range.
double ext_to_double(const ExtReal& x);

ExtReal ext_mul(const ExtReal& a, const ExtReal& b);
ExtReal ext_div(const ExtReal& a, const ExtReal& b); // DomainError on b == 0
// Log-sum-exp anchored at the larger magnitude.  Exact sign-opposite ties
// cancel to zero; throws CancellationUnderflow when opposite signs land
// within 1e-25 of each other in lnmag without cancelling exactly.
ExtReal ext_add(const ExtReal& a, const ExtReal& b);
ExtReal ext_neg(const ExtReal& a);
ExtReal ext_abs(const ExtReal& a);
// DomainError on negative base and on 0^0 / 0^negative.
ExtReal ext_pow(const ExtReal& a, DD r);
ExtReal ext_sqrt(const ExtReal& a);
// Total order on the represented values: -1, 0, +1.
int ext_cmp(const ExtReal& a, const ExtReal& b);

// Directed safety margins: scale by (1 -+ 1e-9) toward the stated side.
ExtReal margin_down(const ExtReal& x);
ExtReal margin_up(const ExtReal& x);

// Canonical serialization: "s:+|ln:<32 significant digits>", "s:0" for zero.
std::string ext_serialize(const ExtReal& x);
// Accepts plain/scientific decimals, "exp:<LOGVALUE>", and the canonical
// "s:+|ln:..." form.  Throws UsageError on malformed input.
ExtReal ext_parse(const std::string& text);

// Decimal rendering of a double-double with the given significant digits.
std::string dd_to_string(DD x, int digits = 32);
// Strict decimal parser ([+-]ddd[.ddd][e[+-]dd]); throws UsageError.
DD dd_from_string(const std::string& text);

} // namespace pintz
