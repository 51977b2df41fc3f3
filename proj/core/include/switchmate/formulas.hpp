// Closed-form quantities: unlabelled graph counts, the |V_Q| closed form,
// coefficients aggregated from Aut_Q data, and asymptotic main terms. All
// values are exact rationals; rounding happens only at the report layer.
#pragma once

#include "switchmate/method.hpp"
#include "switchmate/rational.hpp"

namespace switchmate {

// g_k for 0 <= k <= 10, with g_0 = 1 for the degenerate base case.
Int128 graph_count(int k);

// Lemma-style closed form for |V_Q(a,b,c)|.
Int128 count_vq_closed_form(int a, int b, int c);

struct AsymptoticCoefficient {
    MethodId method;
    Rat coefficient;  // sum of 1/|Aut_Q(Gamma)| over the method's classes
    Int128 base;      // |V_Q|
    int m = 0;
};

// Recomputed live from the method's switching-graph data, never hard-coded.
AsymptoticCoefficient table1_coefficient(const SwitchingMethod& method);

// coefficient * |V_Q|^(n-m) * g_(n-m), exact; n - m must lie in [0, 10].
Rat asymptotic_main_term(const SwitchingMethod& method, int n);
Int128 asymptotic_main_term_rounded(const SwitchingMethod& method, int n);

// (1/24) n^3 g_(n-1) for 5 <= n <= 11, the equivalent presentation of the
// GM4 count; exposed to compare the two forms numerically.
Rat gm4_equivalent_form(int n);

}  // namespace switchmate
