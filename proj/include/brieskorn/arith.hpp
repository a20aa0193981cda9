#pragma once

// Exact arithmetic aliases and small number-theory helpers.
// Everything in this library is exact; there is no floating point on any
// value-bearing path (doubles appear only as search-interval estimates that
// are corrected by exact comparisons before use).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "error.hpp"

namespace brieskorn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Representative of a mod m in [0, m). Requires m > 0.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a mod m, in [0, m). Requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_pos(a, m), m, x, y);
    check_internal(g == 1, "mod_inverse: arguments not coprime");
    return mod_pos(x, m);
}

// Floor division (round toward minus infinity), b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline bool is_even(const Int& a) { return (a & 1) == 0; }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int rat_floor(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

inline bool fits_int64(const Int& a) {
    return a >= std::numeric_limits<std::int64_t>::min() &&
           a <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& a) {
    check_internal(fits_int64(a), "to_int64: out of range");
    return a.convert_to<std::int64_t>();
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace brieskorn
