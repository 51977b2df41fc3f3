#include "switchmate/switching.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "switchmate/canonical.hpp"
#include "switchmate/graph6.hpp"
#include "switchmate/switchgraphs.hpp"

namespace switchmate {

namespace {

void check_tuple_shape(const Graph& g, std::span<const int> tuple, int m) {
    if (static_cast<int>(tuple.size()) != m)
        throw ValidationError(ValidationFail::TupleSize, -1,
                              "switching tuple must have " + std::to_string(m) + " vertices");
    std::uint16_t seen = 0;
    for (int v : tuple) {
        if (v < 0 || v >= g.n)
            throw ValidationError(ValidationFail::TupleVertexRange, v,
                                  "tuple vertex out of range");
        if ((seen >> v) & 1u)
            throw ValidationError(ValidationFail::TupleDuplicate, v, "tuple vertex repeated");
        seen |= static_cast<std::uint16_t>(1u << v);
    }
}

std::uint16_t external_vector(const Graph& g, std::span<const int> tuple, int y) {
    std::uint16_t v = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (g.has_edge(y, tuple[i])) v |= static_cast<std::uint16_t>(1u << i);
    return v;
}

Graph rebuild_switched(const Graph& g, std::span<const int> tuple, const Graph& new_gamma,
                       const std::vector<std::pair<int, std::uint16_t>>& new_columns) {
    Graph out = g;
    const int m = new_gamma.n;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const bool want = new_gamma.has_edge(i, j);
            if (out.has_edge(tuple[i], tuple[j]) != want) out.toggle_edge(tuple[i], tuple[j]);
        }
    for (const auto& [y, vec] : new_columns) {
        for (int i = 0; i < m; ++i) {
            const bool want = (vec >> i) & 1u;
            if (out.has_edge(y, tuple[i]) != want) out.toggle_edge(y, tuple[i]);
        }
    }
    return out;
}

}  // namespace

Graph apply_switching_q(const Graph& g, const RationalOrthogonalMatrix& q,
                        std::span<const int> tuple) {
    check_tuple_shape(g, tuple, q.m);
    std::vector<int> tup(tuple.begin(), tuple.end());
    const Graph gamma = g.induced(tup);
    if (!is_switching_graph(q, gamma))
        throw ValidationError(ValidationFail::TupleMismatch, -1,
                              "induced subgraph is not a Q-switching graph");
    const Graph gamma2 = switched_gamma(q, gamma);

    std::uint16_t in_tuple = 0;
    for (int v : tup) in_tuple |= static_cast<std::uint16_t>(1u << v);
    std::vector<std::pair<int, std::uint16_t>> new_columns;
    for (int y = 0; y < g.n; ++y) {
        if ((in_tuple >> y) & 1u) continue;
        const std::uint16_t v = external_vector(g, tuple, y);
        std::uint16_t img = 0;
        for (int j = 0; j < q.m; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < q.m; ++i)
                if ((v >> i) & 1u) s += q.scaled.at(i, j);
            if (s == q.level)
                img |= static_cast<std::uint16_t>(1u << j);
            else if (s != 0)
                throw ValidationError(ValidationFail::ExternalVertexNotRespecting, y,
                                      "vertex " + std::to_string(y) +
                                          " has a non-respecting attachment vector");
        }
        new_columns.emplace_back(y, img);
    }
    return rebuild_switched(g, tuple, gamma2, new_columns);
}

Graph apply_switching(const Graph& g, const SwitchingMethod& method,
                      std::span<const int> tuple) {
    check_tuple_shape(g, tuple, method.m());
    std::vector<int> tup(tuple.begin(), tuple.end());
    const Graph gamma = g.induced(tup);
    if (!is_switching_graph(method.q, gamma))
        throw ValidationError(ValidationFail::TupleMismatch, -1,
                              "induced subgraph is not a Q-switching graph");
    const int cls = method.bq.class_of_canon(canonical_label(gamma).bytes);
    if (cls < 0 || !method.bq.classes[cls].in_method)
        throw ValidationError(ValidationFail::TupleMismatch, -1,
                              "induced subgraph is not one of the method's switching graphs");
    return apply_switching_q(g, method.q, tuple);
}

Graph apply_switching(const Graph& g, const SwitchingMethod& method,
                      const SwitchingInstance& inst) {
    check_tuple_shape(g, inst.tuple, method.m());
    const Graph gamma = g.induced(inst.tuple);
    if (!is_switching_graph(method.q, gamma))
        throw ValidationError(ValidationFail::TupleMismatch, -1,
                              "induced subgraph is not a Q-switching graph");
    const int cls = method.bq.class_of_canon(canonical_label(gamma).bytes);
    if (cls != inst.gamma_index)
        throw ValidationError(ValidationFail::GammaClassMismatch, -1,
                              "induced subgraph does not match the declared switching graph");
    if (cls < 0 || !method.bq.classes[cls].in_method)
        throw ValidationError(ValidationFail::TupleMismatch, -1,
                              "induced subgraph is not one of the method's switching graphs");
    return apply_switching_q(g, method.q, inst.tuple);
}

namespace {

// Aut_Q elements per labelled switching graph, cached by edge structure.
struct AutqCache {
    const SwitchingMethod& method;
    std::map<std::array<std::uint16_t, kMaxVertices>, std::vector<Perm>> cache;

    const std::vector<Perm>& elements(const Graph& gamma) {
        auto it = cache.find(gamma.adj);
        if (it != cache.end()) return it->second;
        const AutomorphismGroup aq = autq_group(method.q, method.vq, gamma);
        std::vector<Perm> elems = aq.generators;  // all non-identity elements
        elems.push_back(identity_perm());
        return cache.emplace(gamma.adj, std::move(elems)).first->second;
    }
};

}  // namespace

std::vector<SwitchingInstance> find_switching_instances(const Graph& g,
                                                        const SwitchingMethod& method) {
    const int m = method.m();
    const int n = g.n;
    std::vector<SwitchingInstance> out;
    if (n < m) return out;

    // weights of respecting vectors: quick necessary condition per subset
    std::uint32_t weight_ok = 0;
    for (std::uint16_t v : method.vq.vectors)
        weight_ok |= 1u << std::popcount(static_cast<unsigned>(v));

    AutqCache autq{method, {}};
    std::unordered_set<std::uint64_t> seen_orbit_keys;

    std::vector<int> comb(m);
    std::vector<int> tup(m);
    auto process_set = [&](const std::vector<int>& set) {
        std::uint16_t in_set = 0;
        for (int v : set) in_set |= static_cast<std::uint16_t>(1u << v);
        for (int y = 0; y < n; ++y) {
            if ((in_set >> y) & 1u) continue;
            const int d = std::popcount(static_cast<unsigned>(g.adj[y] & in_set));
            if (!((weight_ok >> d) & 1u)) return;  // no ordering can work
        }
        const int cls = method.bq.class_of_canon(canonical_label(g.induced(set)).bytes);
        if (cls < 0 || !method.bq.classes[cls].in_method) return;

        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        do {
            for (int i = 0; i < m; ++i) tup[i] = set[idx[i]];
            bool ok = true;
            for (int y = 0; y < n && ok; ++y) {
                if ((in_set >> y) & 1u) continue;
                ok = method.vq.contains(external_vector(g, tup, y));
            }
            if (!ok) continue;
            const Graph gamma = g.induced(tup);
            if (!is_switching_graph(method.q, gamma)) continue;

            // orbit key: minimal tuple over Aut_Q(Gamma) reorderings
            const auto& elems = autq.elements(gamma);
            std::uint64_t best = ~0ull;
            for (const Perm& s : elems) {
                std::uint64_t key = 0;
                for (int i = 0; i < m; ++i) key = (key << 4) | static_cast<std::uint64_t>(tup[s[i]]);
                best = std::min(best, key);
            }
            if (seen_orbit_keys.insert(best).second) {
                SwitchingInstance inst;
                inst.method = method.id;
                inst.tuple.assign(m, 0);
                std::uint64_t k = best;
                for (int i = m - 1; i >= 0; --i) {
                    inst.tuple[i] = static_cast<int>(k & 0xf);
                    k >>= 4;
                }
                inst.gamma_index = cls;
                inst.orbit_count = elems.size();
                out.push_back(std::move(inst));
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    };

    // enumerate m-subsets
    for (int i = 0; i < m; ++i) comb[i] = i;
    for (;;) {
        process_set(comb);
        int i = m - 1;
        while (i >= 0 && comb[i] == n - m + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const SwitchingInstance& a, const SwitchingInstance& b) {
        return a.tuple < b.tuple;
    });
    return out;
}

namespace {

bool constant_value(std::vector<int> vals) {
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] != vals[0]) return false;
    return true;
}

}  // namespace

bool validate_gm_conditions(const Graph& g, std::span<const int> x) {
    if (x.size() % 2 != 0 || x.empty()) return false;
    const int k = static_cast<int>(x.size()) / 2;
    std::uint16_t in_set = 0;
    for (int v : x) in_set |= static_cast<std::uint16_t>(1u << v);
    std::vector<int> degs;
    for (int v : x) degs.push_back(std::popcount(static_cast<unsigned>(g.adj[v] & in_set)));
    if (!constant_value(degs)) return false;  // induced subgraph regular
    for (int y = 0; y < g.n; ++y) {
        if ((in_set >> y) & 1u) continue;
        const int d = std::popcount(static_cast<unsigned>(g.adj[y] & in_set));
        if (d != 0 && d != k && d != 2 * k) return false;
    }
    return true;
}

bool validate_wqh_conditions(const Graph& g, std::span<const int> c0, std::span<const int> c1) {
    if (c0.size() != c1.size() || c0.empty()) return false;
    const int k = static_cast<int>(c0.size());
    std::uint16_t m0 = 0, m1 = 0;
    for (int v : c0) m0 |= static_cast<std::uint16_t>(1u << v);
    for (int v : c1) m1 |= static_cast<std::uint16_t>(1u << v);
    if (m0 & m1) return false;
    std::vector<int> diffs;
    for (int v : c0)
        diffs.push_back(std::popcount(static_cast<unsigned>(g.adj[v] & m1)) -
                        std::popcount(static_cast<unsigned>(g.adj[v] & m0)));
    for (int v : c1)
        diffs.push_back(std::popcount(static_cast<unsigned>(g.adj[v] & m0)) -
                        std::popcount(static_cast<unsigned>(g.adj[v] & m1)));
    if (!constant_value(diffs)) return false;
    for (int y = 0; y < g.n; ++y) {
        if (((m0 | m1) >> y) & 1u) continue;
        const int d0 = std::popcount(static_cast<unsigned>(g.adj[y] & m0));
        const int d1 = std::popcount(static_cast<unsigned>(g.adj[y] & m1));
        if ((d0 - d1) % k != 0) return false;
    }
    return true;
}

std::string instance_to_json(const Graph& g, const SwitchingInstance& inst) {
    nlohmann::json j;
    j["method"] = inst.method.to_string();
    j["tuple"] = inst.tuple;
    j["gamma"] = graph6_encode(g.induced(inst.tuple));
    j["orbit_count"] = inst.orbit_count;
    return j.dump();
}

}  // namespace switchmate
