// Canonical forms via equitable refinement plus individualization-refinement
// backtracking, with optional vertex colorings (ordered partitions). The
// search also harvests automorphism generators; exact group orders come from
// a small Schreier-Sims chain. Equal labels certify (color-respecting)
// isomorphism, which is what the census keys every set on.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "switchmate/graph.hpp"

namespace switchmate {

struct CanonicalLabel {
    std::string bytes;  // canonical graph6, plus "#s1,s2,..." when colored

    bool operator==(const CanonicalLabel& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalLabel& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalLabel& o) const { return bytes < o.bytes; }
};

struct AutomorphismGroup {
    std::vector<Perm> generators;  // color-respecting graph automorphisms
    std::uint64_t order = 1;
};

struct CanonResult {
    Graph canon;      // canonically relabeled graph
    Perm to_canon;    // vertex -> canonical position
    AutomorphismGroup aut;
};

using Coloring = std::vector<std::vector<int>>;  // ordered partition of [n]

CanonResult canonical_form(const Graph& g);
CanonResult canonical_form(const Graph& g, const Coloring& coloring);

CanonicalLabel canonical_label(const Graph& g);
CanonicalLabel canonical_label(const Graph& g, const Coloring& coloring);

AutomorphismGroup automorphism_group(const Graph& g);

inline bool is_asymmetric(const Graph& g) { return automorphism_group(g).order == 1; }

// Exact order of the permutation group generated by `gens` on n points.
std::uint64_t permutation_group_order(const std::vector<Perm>& gens, int n);

// Permutation group with membership testing backed by a stabilizer chain.
class PermGroup {
  public:
    explicit PermGroup(int n);
    ~PermGroup();
    PermGroup(PermGroup&&) noexcept;
    PermGroup& operator=(PermGroup&&) noexcept;

    bool contains(const Perm& p) const;
    void add(const Perm& p);  // no-op when already contained
    std::uint64_t order() const;
    const std::vector<Perm>& generators() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Orbit partition of [n] under the given permutations; returns orbit
// representative (minimum element) per vertex.
std::array<std::uint8_t, kMaxVertices> vertex_orbits(const std::vector<Perm>& gens, int n);

}  // namespace switchmate
