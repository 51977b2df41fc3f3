// Q-switching graphs: the labelled graphs Gamma on the switching set for
// which Q^T A(Gamma) Q is again an adjacency matrix, found by exhaustive scan
// over all labelled graphs, grouped into orbits under the setwise stabilizer
// W_Q of the respecting-vector set, with Aut_Q data per class.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "switchmate/canonical.hpp"
#include "switchmate/graph.hpp"
#include "switchmate/ratorth.hpp"
#include "switchmate/respecting.hpp"

namespace switchmate {

struct GammaClass {
    Graph rep;              // labelled representative (minimal edge mask in its orbit)
    Graph switched_rep;     // Q^T A(rep) Q
    std::uint64_t aut_order = 1;
    std::uint64_t autq_order = 1;
    std::uint64_t labelled_count = 1;  // size of the W_Q-orbit of labelled members
    bool distinguishing = false;
    bool switching_distinguishing = false;
    int complement_index = -1;  // class whose members are the complements
    bool in_method = true;      // false for the reducible AH6 / Fano classes
    std::string canon_g6;       // canonical label of the unlabelled class
};

struct SwitchingGraphSet {
    int m = 0;
    std::uint64_t wq_order = 1;          // |W_Q|
    std::vector<Perm> wq_generators;
    std::vector<GammaClass> classes;     // sorted by canon_g6, then labelled rep
    // true when two distinct labelled classes share an unlabelled class; the
    // census must then keep them separate (see the distinctness detector test)
    bool split_iso_class = false;

    int class_of_canon(const std::string& g6) const;
};

// Exhaustive scan over all 2^{m(m-1)/2} labelled graphs; m <= 8.
SwitchingGraphSet switching_graphs(const RationalOrthogonalMatrix& q,
                                   const RespectingVectorSet& vq, int threads = 1);

// Direct membership test and the conjugated labelled graph.
bool is_switching_graph(const RationalOrthogonalMatrix& q, const Graph& gamma);
Graph switched_gamma(const RationalOrthogonalMatrix& q, const Graph& gamma);

// All permutations of [m] preserving the vector set setwise.
std::vector<Perm> vq_setwise_stabilizer(const RespectingVectorSet& vq);

// Aut_Q(Gamma): automorphisms of Gamma whose entry action maps V_Q onto
// itself, computed by filtering the full automorphism group.
AutomorphismGroup autq_group(const RationalOrthogonalMatrix& q,
                             const RespectingVectorSet& vq, const Graph& gamma);

// Aut_Q(Gamma) acts faithfully on V_Q.
bool is_distinguishing(const RationalOrthogonalMatrix& q, const RespectingVectorSet& vq,
                       const Graph& gamma);

// No permutation phi replays the switching: phi . A(Gamma) = Q^T A(Gamma) Q
// with v_i = (Q^T v)_{phi(i)} for every respecting vector and position.
bool is_switching_distinguishing(const RationalOrthogonalMatrix& q,
                                 const RespectingVectorSet& vq, const Graph& gamma);

// mask image under entry permutation: bit p[i] of result = bit i of mask
std::uint16_t permute_mask(std::uint16_t mask, const Perm& p, int m);

}  // namespace switchmate
