// The six-block construction showing a WQH switch that lands on an isomorphic
// graph while no isomorphism fixes the switching set. The switch here is the
// combinatorial WQH edge flip on the {0,k}-attachment vertices.
#pragma once

#include <cstdint>
#include <vector>

#include "switchmate/graph.hpp"

namespace switchmate {

// V1, V2 given as column masks (k bits per column, l columns). Column sums
// must match columnwise and lie in [1, k-1]. B is the shared l-vertex block.
Graph build_appendix_graph(int k, int l, const Graph& b,
                           const std::vector<std::uint16_t>& v1_cols,
                           const std::vector<std::uint16_t>& v2_cols);

// Default instantiation: B empty, V1 = V2 = unit-column pattern (t = 1).
Graph default_appendix_graph(int k, int l);

// WQH edge flip on C0 = [0,k), C1 = [k,2k): toggle all edges between the
// switching set and every outside vertex with degree pattern {0,k}.
Graph wqh_flip(const Graph& g, int k);

struct AppendixReport {
    bool isomorphic = false;                // plain canonical labels agree
    bool fixing_isomorphism_exists = false; // colored labels (set vs rest) agree
    Graph switched;
};

// The two claims, decided by plain and colored canonical labels. Works on any
// graph whose designated switching set is the first 2k vertices.
AppendixReport verify_appendix_claims(const Graph& g, int k);

}  // namespace switchmate
