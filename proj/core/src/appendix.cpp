#include "switchmate/appendix.hpp"

#include <stdexcept>
#include <string>

#include "switchmate/canonical.hpp"

namespace switchmate {

namespace {

void check_columns(int k, int l, const std::vector<std::uint16_t>& cols1,
                   const std::vector<std::uint16_t>& cols2) {
    if (static_cast<int>(cols1.size()) != l || static_cast<int>(cols2.size()) != l)
        throw std::invalid_argument("appendix: V1/V2 need exactly l columns");
    for (int j = 0; j < l; ++j) {
        const int t1 = std::popcount(static_cast<unsigned>(cols1[j] & ((1u << k) - 1u)));
        const int t2 = std::popcount(static_cast<unsigned>(cols2[j] & ((1u << k) - 1u)));
        if (t1 != t2)
            throw std::invalid_argument("appendix: column " + std::to_string(j) +
                                        " of V1 and V2 have different sums");
        if (t1 < 1 || t1 > k - 1)
            throw std::invalid_argument("appendix: column " + std::to_string(j) +
                                        " sum outside [1, k-1]");
        if (cols1[j] >> k || cols2[j] >> k)
            throw std::invalid_argument("appendix: column " + std::to_string(j) +
                                        " has bits beyond k rows");
    }
}

}  // namespace

Graph build_appendix_graph(int k, int l, const Graph& b,
                           const std::vector<std::uint16_t>& v1_cols,
                           const std::vector<std::uint16_t>& v2_cols) {
    if (k < 2 || l < 2) throw std::invalid_argument("appendix: need k >= 2 and l >= 2");
    const int n = 3 * k + 3 * l;
    if (n > kMaxVertices) throw std::invalid_argument("appendix: 3k+3l exceeds 16 vertices");
    if (b.n != l) throw std::invalid_argument("appendix: B must have order l");
    check_columns(k, l, v1_cols, v2_cols);

    Graph g(n);
    const int k1 = 0, k2 = k, k3 = 2 * k;        // k-blocks
    const int l1 = 3 * k, l2 = 3 * k + l, l3 = 3 * k + 2 * l;  // l-blocks

    auto add_full = [&](int base_a, int base_b) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) g.add_edge(base_a + i, base_b + j);
    };
    auto add_cols = [&](int kbase, int lbase, const std::vector<std::uint16_t>& cols) {
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < k; ++i)
                if ((cols[j] >> i) & 1u) g.add_edge(kbase + i, lbase + j);
    };
    auto add_b = [&](int base) {
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (b.has_edge(i, j)) g.add_edge(base + i, base + j);
    };
    auto add_n = [&](int base_rows, int base_cols) {
        // N is zero except one full row of ones (row 0 here)
        for (int j = 0; j < l; ++j) g.add_edge(base_rows + 0, base_cols + j);
    };

    add_full(k1, k2);
    add_full(k1, k3);
    add_cols(k1, l1, v1_cols);
    add_cols(k1, l3, v2_cols);
    add_cols(k2, l1, v2_cols);
    add_cols(k2, l2, v1_cols);
    add_cols(k3, l2, v2_cols);
    add_cols(k3, l3, v1_cols);
    add_b(l1);
    add_b(l2);
    add_b(l3);
    add_n(l1, l2);   // block (4,5) = N
    add_n(l3, l1);   // block (4,6) = N^T, i.e. (6,4) = N
    add_n(l2, l3);   // block (5,6) = N
    return g;
}

Graph default_appendix_graph(int k, int l) {
    std::vector<std::uint16_t> cols(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) cols[j] = static_cast<std::uint16_t>(1u << (j % k));
    Graph b(l);
    return build_appendix_graph(k, l, b, cols, cols);
}

Graph wqh_flip(const Graph& g, int k) {
    if (2 * k > g.n) throw std::invalid_argument("wqh_flip: switching set larger than graph");
    const std::uint16_t m0 = static_cast<std::uint16_t>(((1u << k) - 1u));
    const std::uint16_t m1 = static_cast<std::uint16_t>(m0 << k);
    Graph out = g;
    for (int y = 2 * k; y < g.n; ++y) {
        const int d0 = std::popcount(static_cast<unsigned>(g.adj[y] & m0));
        const int d1 = std::popcount(static_cast<unsigned>(g.adj[y] & m1));
        const bool pattern = (d0 == 0 && d1 == k) || (d0 == k && d1 == 0);
        if (!pattern) continue;
        for (int x = 0; x < 2 * k; ++x) out.toggle_edge(y, x);
    }
    return out;
}

AppendixReport verify_appendix_claims(const Graph& g, int k) {
    AppendixReport rep;
    rep.switched = wqh_flip(g, k);
    rep.isomorphic = canonical_label(g) == canonical_label(rep.switched);
    Coloring coloring(2);
    for (int v = 0; v < 2 * k; ++v) coloring[0].push_back(v);
    for (int v = 2 * k; v < g.n; ++v) coloring[1].push_back(v);
    rep.fixing_isomorphism_exists =
        canonical_label(g, coloring) == canonical_label(rep.switched, coloring);
    return rep;
}

}  // namespace switchmate
