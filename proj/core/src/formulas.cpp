#include "switchmate/formulas.hpp"

#include <stdexcept>

namespace switchmate {

namespace {

// unlabelled graph counts; k <= 8 re-derived live by the generation engine in
// the test suite, g_9 and g_10 in the slow tier
constexpr std::int64_t kGraphCounts[11] = {1,    1,    2,     4,      11,    34,
                                           156,  1044, 12346, 274668, 12005168};

Int128 binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int128 r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace

Int128 graph_count(int k) {
    if (k < 0 || k > 10) throw std::out_of_range("graph_count: order outside [0,10]");
    return kGraphCounts[k];
}

Int128 count_vq_closed_form(int a, int b, int c) {
    if (a < 1 || b < 2 || (c != 1 && c != -1))
        throw std::invalid_argument("count_vq_closed_form: need a >= 1, b >= 2, c = +-1");
    Int128 two_b = 1;
    for (int i = 0; i < b; ++i) two_b = checked_mul(two_b, 2);
    const bool a_even = a % 2 == 0;
    const bool b_odd = b % 2 == 1;
    if (b_odd && c == -1) {
        if (!a_even) return two_b;  // (odd, odd, -1)
        Int128 mid = binom(a, a / 2);
        Int128 pow = 1;
        for (int i = 0; i < b; ++i) pow = checked_mul(pow, mid);
        return checked_add(two_b, pow);
    }
    Int128 total = two_b;
    for (int i = 1; i <= a - 1; ++i) {
        Int128 pow = 1;
        const Int128 bi = binom(a, i);
        for (int j = 0; j < b; ++j) pow = checked_mul(pow, bi);
        total = checked_add(total, pow);
    }
    return total;
}

AsymptoticCoefficient table1_coefficient(const SwitchingMethod& method) {
    AsymptoticCoefficient out;
    out.method = method.id;
    out.base = static_cast<Int128>(method.vq.size());
    out.m = method.m();
    Rat sum{0};
    for (const auto& c : method.bq.classes) {
        if (!c.in_method) continue;
        sum = sum + Rat(1, static_cast<Int128>(c.autq_order));
    }
    out.coefficient = sum;
    return out;
}

Rat asymptotic_main_term(const SwitchingMethod& method, int n) {
    const int m = method.m();
    if (n < m) throw std::out_of_range("asymptotic_main_term: n < m");
    if (n - m > 10) throw std::out_of_range("asymptotic_main_term: n - m outside the g table");
    const AsymptoticCoefficient coeff = table1_coefficient(method);
    return coeff.coefficient * rat_pow(Rat(coeff.base), n - m) * Rat(graph_count(n - m));
}

Int128 asymptotic_main_term_rounded(const SwitchingMethod& method, int n) {
    return asymptotic_main_term(method, n).round_nearest();
}

Rat gm4_equivalent_form(int n) {
    if (n < 5 || n > 11) throw std::out_of_range("gm4_equivalent_form: n outside [5,11]");
    return Rat(1, 24) * Rat(static_cast<Int128>(n) * n * n) * Rat(graph_count(n - 1));
}

}  // namespace switchmate
