#include "switchmate/rational.hpp"

namespace switchmate {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

void Rat::normalize() {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        den = 1;
        return;
    }
    const Int128 g = gcd128(num, den);
    num /= g;
    den /= g;
}

std::string Rat::to_string() const {
    if (den == 1) return int128_to_string(num);
    return int128_to_string(num) + "/" + int128_to_string(den);
}

Int128 Rat::round_nearest() const {
    const Int128 q = num / den;
    const Int128 r = num % den;  // sign of num
    Int128 twice = r < 0 ? -2 * r : 2 * r;
    if (twice >= den) return num < 0 ? q - 1 : q + 1;
    return q;
}

Rat rat_pow(const Rat& base, int exp) {
    if (exp < 0) throw std::domain_error("rat_pow: negative exponent");
    Rat r{1};
    for (int i = 0; i < exp; ++i) r = r * base;
    return r;
}

std::string decimal_round_half_even(const Rat& value, int places) {
    Int128 scale = 1;
    for (int i = 0; i < places; ++i) scale = checked_mul(scale, 10);
    const bool neg = value.num < 0;
    Int128 num = neg ? -value.num : value.num;
    num = checked_mul(num, scale);
    Int128 q = num / value.den;
    const Int128 r = num % value.den;
    const Int128 twice = checked_mul(r, 2);
    if (twice > value.den || (twice == value.den && (q % 2) != 0)) ++q;

    std::string digits = int128_to_string(q);
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places + 1 - digits.size()), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (neg && q != 0) out.insert(0, "-");
    return out;
}

}  // namespace switchmate
