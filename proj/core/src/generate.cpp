#include "switchmate/generate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "switchmate/canonical.hpp"
#include "switchmate/graph6.hpp"

namespace switchmate {

namespace {

// Is `s` the numerically smallest subset mask in its orbit under the group
// generated by `gens`? BFS over the orbit, bailing out on a smaller image.
bool subset_is_orbit_min(std::uint16_t s, const std::vector<Perm>& gens, int n) {
    if (gens.empty()) return true;
    std::vector<std::uint16_t> frontier{s};
    std::vector<std::uint16_t> seen{s};
    while (!frontier.empty()) {
        const std::uint16_t cur = frontier.back();
        frontier.pop_back();
        for (const Perm& p : gens) {
            std::uint16_t img = 0;
            std::uint16_t rest = cur;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= static_cast<std::uint16_t>(rest - 1);
                img |= static_cast<std::uint16_t>(1u << p[v]);
            }
            if (img < s) return false;
            if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
                seen.push_back(img);
                frontier.push_back(img);
            }
        }
    }
    return true;
}

void extend(const Graph& g, int target, const std::function<void(const Graph&)>& fn) {
    if (g.n == target) {
        fn(g);
        return;
    }
    const CanonResult cr = canonical_form(g);
    const std::uint16_t all = g.vertex_mask();
    for (std::uint16_t s = 0; s <= all; ++s) {
        if (!subset_is_orbit_min(s, cr.aut.generators, g.n)) continue;
        Graph h(g.n + 1);
        h.adj = g.adj;
        const int x = g.n;
        std::uint16_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= static_cast<std::uint16_t>(rest - 1);
            h.add_edge(x, v);
        }
        // canonical deletion: the vertex landing on the last canonical
        // position; accept iff x is in its automorphism orbit
        const CanonResult hc = canonical_form(h);
        const Perm from_canon = inverse(hc.to_canon);
        const int del = from_canon[h.n - 1];
        const auto orb = vertex_orbits(hc.aut.generators, h.n);
        if (orb[x] == orb[del]) extend(h, target, fn);
        if (s == all) break;  // uint16 wrap guard
    }
}

}  // namespace

void for_each_graph(int k, const std::function<void(const Graph&)>& fn) {
    if (k < 1 || k > 10) throw std::invalid_argument("generate: order must be in [1,10]");
    extend(Graph(1), k, fn);
}

std::vector<Graph> generate_all_graphs(int k) {
    std::vector<std::pair<std::string, Graph>> out;
    for_each_graph(k, [&](const Graph& g) {
        Graph c = canonical_form(g).canon;
        out.emplace_back(graph6_encode(c), c);
    });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> res;
    res.reserve(out.size());
    for (auto& [lbl, g] : out) res.push_back(g);
    return res;
}

std::uint64_t count_all_graphs(int k, int threads) {
    if (k < 1 || k > 10) throw std::invalid_argument("generate: order must be in [1,10]");
    if (threads <= 1 || k <= 7) {
        std::uint64_t c = 0;
        for_each_graph(k, [&](const Graph&) { ++c; });
        return c;
    }
    // split the search forest at order 7 and farm the subtrees out
    std::vector<Graph> roots;
    for_each_graph(7, [&](const Graph& g) { roots.push_back(g); });
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    auto work = [&]() {
        std::uint64_t local = 0;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) break;
            extend(roots[i], k, [&](const Graph&) { ++local; });
        }
        total.fetch_add(local);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return total.load();
}

}  // namespace switchmate
