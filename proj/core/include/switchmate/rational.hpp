// Exact rational arithmetic on 128-bit integers. Wide enough for every
// quantity the formula layer produces (|V_Q|^(n-m) * g_(n-m) with n-m <= 10),
// with overflow checks so silent wraparound is impossible.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace switchmate {

using Int128 = __int128;

std::string int128_to_string(Int128 v);

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
    return r;
}

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
    return r;
}

struct Rat {
    Int128 num = 0;
    Int128 den = 1;  // always > 0, gcd(|num|, den) == 1

    Rat() = default;
    Rat(Int128 n) : num(n), den(1) {}
    Rat(Int128 n, Int128 d) : num(n), den(d) { normalize(); }

    void normalize();

    Rat operator+(const Rat& o) const {
        return Rat(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator-(const Rat& o) const {
        return Rat(checked_add(checked_mul(num, o.den), -checked_mul(o.num, den)),
                   checked_mul(den, o.den));
    }
    Rat operator*(const Rat& o) const {
        return Rat(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("rational: division by zero");
        return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const {
        return checked_mul(num, o.den) < checked_mul(o.num, den);
    }

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const;  // "p" or "p/q"

    // nearest integer, ties away from zero (table-style rounding)
    Int128 round_nearest() const;
};

// Exact power with nonnegative exponent.
Rat rat_pow(const Rat& base, int exp);

// value rounded to `places` decimals, ties to even; returns e.g. "0.083".
std::string decimal_round_half_even(const Rat& value, int places);

}  // namespace switchmate
