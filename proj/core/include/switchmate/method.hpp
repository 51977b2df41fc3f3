// Assembled switching methods: the orthogonal matrix, its respecting vectors,
// its switching-graph classes, and the census bookkeeping derived from them.
// AH6 and Fano restrict the usable classes to the irreducible ones; the other
// classes stay visible with in_method = false.
#pragma once

#include <memory>
#include <vector>

#include "switchmate/ratorth.hpp"
#include "switchmate/respecting.hpp"
#include "switchmate/switchgraphs.hpp"

namespace switchmate {

struct SwitchingMethod {
    MethodId id;
    RationalOrthogonalMatrix q;
    RespectingVectorSet vq;
    SwitchingGraphSet bq;
    std::vector<int> census_reps;  // in-method classes, one per complement pair

    int m() const { return q.m; }
};

// Cached catalog; the first request for a method pays for its scans.
const SwitchingMethod& get_method(const MethodId& id, int threads = 1);

// The seven named methods in spec order.
std::vector<MethodId> named_methods();

// The paper's irreducible AH6 switching graph (triangle with a pendant at
// each corner, labelled to match Q(2,3,1)'s blocks) and the two irreducible
// Fano switching graphs (the 7-cycle and the 10-edge graph).
Graph ah6_gamma();
Graph fano_gamma_cycle();
Graph fano_gamma_dense();

}  // namespace switchmate
