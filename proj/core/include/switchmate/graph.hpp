// Dense loopless undirected graphs on at most 16 vertices, one bitmask row
// per vertex. Everything downstream (canonical forms, switching, census)
// assumes this fixed-width representation, so the cap is a hard invariant.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace switchmate {

inline constexpr int kMaxVertices = 16;

using Perm = std::array<std::uint8_t, kMaxVertices>;

inline Perm identity_perm() {
    Perm p{};
    for (int i = 0; i < kMaxVertices; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

// compose(a, b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
    Perm c{};
    for (int i = 0; i < kMaxVertices; ++i) c[i] = a[b[i]];
    return c;
}

inline Perm inverse(const Perm& p) {
    Perm q{};
    for (int i = 0; i < kMaxVertices; ++i) q[p[i]] = static_cast<std::uint8_t>(i);
    return q;
}

struct Graph {
    int n = 0;
    std::array<std::uint16_t, kMaxVertices> adj{};  // row i = neighbor set of i

    Graph() = default;
    explicit Graph(int vertices) : n(vertices) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range [0,16]");
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }

    void remove_edge(int u, int v) {
        adj[u] &= static_cast<std::uint16_t>(~(1u << v));
        adj[v] &= static_cast<std::uint16_t>(~(1u << u));
    }

    void toggle_edge(int u, int v) {
        adj[u] ^= static_cast<std::uint16_t>(1u << v);
        adj[v] ^= static_cast<std::uint16_t>(1u << u);
    }

    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int s = 0;
        for (int i = 0; i < n; ++i) s += degree(i);
        return s / 2;
    }

    std::uint16_t vertex_mask() const {
        return static_cast<std::uint16_t>((1u << n) - 1u);
    }

    Graph complement() const {
        Graph h(n);
        const std::uint16_t all = vertex_mask();
        for (int i = 0; i < n; ++i)
            h.adj[i] = static_cast<std::uint16_t>((~adj[i] & all) & ~(1u << i));
        return h;
    }

    // Relabel: vertex v becomes p[v].
    Graph permuted(const Perm& p) const {
        Graph h(n);
        for (int v = 0; v < n; ++v) {
            std::uint16_t row = adj[v];
            std::uint16_t out = 0;
            while (row) {
                int w = std::countr_zero(row);
                row &= static_cast<std::uint16_t>(row - 1);
                out |= static_cast<std::uint16_t>(1u << p[w]);
            }
            h.adj[p[v]] = out;
        }
        return h;
    }

    // Induced subgraph on the ordered tuple; tuple[i] becomes vertex i.
    Graph induced(std::span<const int> tuple) const {
        Graph h(static_cast<int>(tuple.size()));
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (has_edge(tuple[i], tuple[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        return h;
    }

    bool operator==(const Graph& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (adj[i] != o.adj[i]) return false;
        return true;
    }

    // symmetric, loopless, no bits >= n
    bool valid() const {
        if (n < 0 || n > kMaxVertices) return false;
        const std::uint16_t all = vertex_mask();
        for (int i = 0; i < n; ++i) {
            if (adj[i] & ~all) return false;
            if ((adj[i] >> i) & 1u) return false;
            for (int j = i + 1; j < n; ++j)
                if (has_edge(i, j) != has_edge(j, i)) return false;
        }
        for (int i = n; i < kMaxVertices; ++i)
            if (adj[i]) return false;
        return true;
    }
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace switchmate
