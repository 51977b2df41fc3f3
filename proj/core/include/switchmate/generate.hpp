// Isomorph-free exhaustive generation of graphs of a given order by canonical
// vertex augmentation: a child is kept only when the newly added vertex lies
// in the automorphism orbit of the canonical deletion vertex, and neighborhood
// subsets are taken up to the parent's automorphisms.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "switchmate/graph.hpp"

namespace switchmate {

// One representative per isomorphism class, emitted as the canonically
// relabeled graph, sorted by canonical label bytes. 1 <= k <= 10.
std::vector<Graph> generate_all_graphs(int k);

// Streaming count without materializing; usable up to k = 10 (g_10 is a long
// single-run job, see the slow test tier).
std::uint64_t count_all_graphs(int k, int threads = 1);

// Visit one representative per class in generation order (not sorted).
void for_each_graph(int k, const std::function<void(const Graph&)>& fn);

}  // namespace switchmate
