#include "switchmate/switchgraphs.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "switchmate/graph6.hpp"

namespace switchmate {

namespace {

struct EdgeList {
    int m;
    int count;
    std::array<std::pair<int, int>, 28> edges;
};

EdgeList edge_list(int m) {
    EdgeList el{m, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) el.edges[el.count++] = {i, j};
    return el;
}

Graph graph_from_edge_mask(const EdgeList& el, std::uint32_t mask) {
    Graph g(el.m);
    for (int e = 0; e < el.count; ++e)
        if ((mask >> e) & 1u) g.add_edge(el.edges[e].first, el.edges[e].second);
    return g;
}

std::uint32_t edge_mask_of(const EdgeList& el, const Graph& g) {
    std::uint32_t mask = 0;
    for (int e = 0; e < el.count; ++e)
        if (g.has_edge(el.edges[e].first, el.edges[e].second)) mask |= 1u << e;
    return mask;
}

std::uint32_t permute_edge_mask(const EdgeList& el, std::uint32_t mask, const Perm& p) {
    std::uint32_t out = 0;
    std::uint32_t rest = mask;
    while (rest) {
        const int e = std::countr_zero(rest);
        rest &= rest - 1;
        int i = p[el.edges[e].first], j = p[el.edges[e].second];
        if (i > j) std::swap(i, j);
        // edge (i,j) with i<j has index sum_{k<i}(m-1-k) + (j-i-1)
        const int idx = i * el.m - i * (i + 1) / 2 + (j - i - 1);
        out |= 1u << idx;
    }
    return out;
}

// Enumerate all members of the full automorphism group from its generators.
std::vector<Perm> group_elements(const std::vector<Perm>& gens, int n) {
    auto pack = [n](const Perm& p) {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i) k = (k << 4) | p[i];
        return k;
    };
    std::vector<Perm> elems{identity_perm()};
    std::unordered_set<std::uint64_t> seen{pack(elems[0])};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const Perm& g : gens) {
            const Perm q = compose(g, elems[i]);
            if (seen.insert(pack(q)).second) elems.push_back(q);
        }
    }
    return elems;
}

}  // namespace

std::uint16_t permute_mask(std::uint16_t mask, const Perm& p, int m) {
    std::uint16_t out = 0;
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) out |= static_cast<std::uint16_t>(1u << p[i]);
    return out;
}

bool is_switching_graph(const RationalOrthogonalMatrix& q, const Graph& gamma) {
    if (gamma.n != q.m) return false;
    const std::int64_t l2 = q.level * q.level;
    IntMat a(q.m, q.m);
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j) a.at(i, j) = gamma.has_edge(i, j) ? 1 : 0;
    const IntMat s = q.scaled.transposed() * a * q.scaled;
    for (int i = 0; i < q.m; ++i) {
        if (s.at(i, i) != 0) return false;
        for (int j = i + 1; j < q.m; ++j)
            if (s.at(i, j) != 0 && s.at(i, j) != l2) return false;
    }
    return true;
}

Graph switched_gamma(const RationalOrthogonalMatrix& q, const Graph& gamma) {
    if (!is_switching_graph(q, gamma))
        throw std::invalid_argument("switched_gamma: not a Q-switching graph");
    const std::int64_t l2 = q.level * q.level;
    IntMat a(q.m, q.m);
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j) a.at(i, j) = gamma.has_edge(i, j) ? 1 : 0;
    const IntMat s = q.scaled.transposed() * a * q.scaled;
    Graph out(q.m);
    for (int i = 0; i < q.m; ++i)
        for (int j = i + 1; j < q.m; ++j)
            if (s.at(i, j) == l2) out.add_edge(i, j);
    return out;
}

std::vector<Perm> vq_setwise_stabilizer(const RespectingVectorSet& vq) {
    const int m = vq.m;
    if (m > 8) throw std::invalid_argument("vq_setwise_stabilizer: dimension > 8");
    std::vector<Perm> elems;
    Perm p = identity_perm();
    std::array<int, 8> idx{};
    for (int i = 0; i < m; ++i) idx[i] = i;
    do {
        for (int i = 0; i < m; ++i) p[i] = static_cast<std::uint8_t>(idx[i]);
        bool ok = true;
        for (std::uint16_t v : vq.vectors) {
            if (!vq.contains(permute_mask(v, p, m))) {
                ok = false;
                break;
            }
        }
        if (ok) elems.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.begin() + m));
    return elems;
}

AutomorphismGroup autq_group(const RationalOrthogonalMatrix& q, const RespectingVectorSet& vq,
                             const Graph& gamma) {
    if (!is_switching_graph(q, gamma))
        throw std::invalid_argument("autq_group: not a Q-switching graph");
    const auto full = automorphism_group(gamma);
    const auto elems = group_elements(full.generators, gamma.n);
    AutomorphismGroup out;
    std::uint64_t count = 0;
    for (const Perm& s : elems) {
        bool ok = true;
        for (std::uint16_t v : vq.vectors) {
            if (!vq.contains(permute_mask(v, s, gamma.n))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ++count;
        bool id = true;
        for (int i = 0; i < gamma.n && id; ++i) id = s[i] == i;
        if (!id) out.generators.push_back(s);
    }
    out.order = count;
    return out;
}

bool is_distinguishing(const RationalOrthogonalMatrix& q, const RespectingVectorSet& vq,
                       const Graph& gamma) {
    const auto aq = autq_group(q, vq, gamma);
    for (const Perm& s : aq.generators) {  // generators list holds every non-identity element
        bool fixes_all = true;
        for (std::uint16_t v : vq.vectors) {
            if (permute_mask(v, s, gamma.n) != v) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) return false;
    }
    return true;
}

namespace {

// position signatures over the vector list: phi(i) is only possible when the
// image column phi(i) reads the same bit sequence as source column i
struct Signatures {
    std::vector<std::vector<std::uint64_t>> src, img;
};

Signatures position_signatures(const RespectingVectorSet& vq) {
    const int m = vq.m;
    const std::size_t words = (vq.size() + 63) / 64;
    Signatures s;
    s.src.assign(m, std::vector<std::uint64_t>(words, 0));
    s.img.assign(m, std::vector<std::uint64_t>(words, 0));
    for (std::size_t k = 0; k < vq.size(); ++k) {
        for (int i = 0; i < m; ++i) {
            if ((vq.vectors[k] >> i) & 1u) s.src[i][k / 64] |= 1ull << (k % 64);
            if ((vq.images[k] >> i) & 1u) s.img[i][k / 64] |= 1ull << (k % 64);
        }
    }
    return s;
}

bool extend_phi(const Graph& gamma, const Graph& switched, const std::vector<std::uint16_t>& cand,
                int i, Perm& phi, std::uint16_t used) {
    const int m = gamma.n;
    if (i == m) return true;
    std::uint16_t options = cand[i] & static_cast<std::uint16_t>(~used);
    while (options) {
        const int j = std::countr_zero(options);
        options &= static_cast<std::uint16_t>(options - 1);
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            ok = gamma.has_edge(k, i) == switched.has_edge(phi[k], j);
        if (!ok) continue;
        phi[i] = static_cast<std::uint8_t>(j);
        if (extend_phi(gamma, switched, cand, i + 1, phi, static_cast<std::uint16_t>(used | (1u << j))))
            return true;
    }
    return false;
}

}  // namespace

bool is_switching_distinguishing(const RationalOrthogonalMatrix& q,
                                 const RespectingVectorSet& vq, const Graph& gamma) {
    const Graph switched = switched_gamma(q, gamma);  // validates membership
    const int m = gamma.n;
    const Signatures sig = position_signatures(vq);
    std::vector<std::uint16_t> cand(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (sig.src[i] == sig.img[j]) cand[i] |= static_cast<std::uint16_t>(1u << j);
    Perm phi = identity_perm();
    return !extend_phi(gamma, switched, cand, 0, phi, 0);
}

namespace {

// Gray-code scan over labelled graphs with edge (0,1) absent; complements of
// the hits supply the other half of B_Q.
std::vector<std::uint32_t> scan_half(const RationalOrthogonalMatrix& q, const EdgeList& el,
                                     std::uint64_t lo, std::uint64_t hi) {
    const int P = q.m * (q.m + 1) / 2;  // positions (i<=j)
    const std::int64_t l2 = q.level * q.level;
    std::array<std::pair<int, int>, 36> pos{};
    std::array<bool, 36> isdiag{};
    int np = 0;
    for (int i = 0; i < q.m; ++i)
        for (int j = i; j < q.m; ++j) {
            pos[np] = {i, j};
            isdiag[np] = i == j;
            ++np;
        }
    // delta[e][t]: contribution of edge e to scaled quadratic form position t
    std::vector<std::array<std::int32_t, 36>> delta(el.count);
    for (int e = 0; e < el.count; ++e) {
        const auto [u, v] = el.edges[e];
        for (int t = 0; t < P; ++t) {
            const auto [i, j] = pos[t];
            delta[e][t] = static_cast<std::int32_t>(q.scaled.at(u, i) * q.scaled.at(v, j) +
                                                    q.scaled.at(v, i) * q.scaled.at(u, j));
        }
    }

    std::array<std::int32_t, 36> s{};
    std::array<bool, 36> bad{};
    int nbad = 0;
    std::uint32_t mask = 0;

    auto flip_edge = [&](int e) {
        const std::int32_t sign = ((mask >> e) & 1u) ? -1 : 1;
        mask ^= 1u << e;
        for (int t = 0; t < P; ++t) {
            s[t] += sign * delta[e][t];
            const bool b = isdiag[t] ? s[t] != 0 : (s[t] != 0 && s[t] != l2);
            nbad += static_cast<int>(b) - static_cast<int>(bad[t]);
            bad[t] = b;
        }
    };

    // initialize at counter value `lo`: Gray code over edges 1..count-1
    const std::uint64_t g0 = lo ^ (lo >> 1);
    for (int b = 0; b + 1 < el.count; ++b)
        if ((g0 >> b) & 1ull) flip_edge(b + 1);

    std::vector<std::uint32_t> hits;
    if (nbad == 0) hits.push_back(mask);
    for (std::uint64_t c = lo + 1; c < hi; ++c) {
        flip_edge(static_cast<int>(std::countr_zero(c)) + 1);
        if (nbad == 0) hits.push_back(mask);
    }
    return hits;
}

}  // namespace

SwitchingGraphSet switching_graphs(const RationalOrthogonalMatrix& q,
                                   const RespectingVectorSet& vq, int threads) {
    if (q.m > 8) throw std::invalid_argument("switching_graphs: dimension > 8");
    const EdgeList el = edge_list(q.m);
    const std::uint64_t space = el.count > 1 ? (1ull << (el.count - 1)) : 1;
    if (threads < 1) threads = 1;
    threads = std::min<std::uint64_t>(threads, 8);

    std::vector<std::vector<std::uint32_t>> parts(threads);
    {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (space + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(space, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, t, lo, hi]() { parts[t] = scan_half(q, el, lo, hi); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint32_t> members;
    const std::uint32_t full = el.count == 32 ? 0xffffffffu : (1u << el.count) - 1u;
    for (auto& p : parts) {
        for (std::uint32_t mask : p) {
            members.push_back(mask);
            members.push_back(~mask & full);
        }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    SwitchingGraphSet out;
    out.m = q.m;
    out.wq_generators.clear();
    {
        const auto elems = vq_setwise_stabilizer(vq);
        out.wq_order = elems.size();
        PermGroup grp(q.m);
        for (const Perm& e : elems) {
            if (!grp.contains(e)) grp.add(e);
        }
        out.wq_generators = grp.generators();
    }

    // orbit partition of the labelled members under W_Q
    std::unordered_map<std::uint32_t, std::int32_t> pos_of;
    pos_of.reserve(members.size() * 2);
    for (std::size_t i = 0; i < members.size(); ++i)
        pos_of[members[i]] = static_cast<std::int32_t>(i);
    std::vector<std::int32_t> uf(members.size());
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<std::int32_t>(i);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (const Perm& g : out.wq_generators) {
            const std::uint32_t img = permute_edge_mask(el, members[i], g);
            const auto it = pos_of.find(img);
            if (it == pos_of.end()) {
                std::fprintf(stderr, "DBG m=%d members=%zu mask=%x img=%x perm=", q.m,
                             members.size(), members[i], img);
                for (int z = 0; z < q.m; ++z) std::fprintf(stderr, "%d", g[z]);
                std::fprintf(stderr, "\n");
                throw std::logic_error("switching_graphs: W_Q does not preserve B_Q");
            }
            const std::int32_t a = find(static_cast<std::int32_t>(i));
            const std::int32_t b = find(it->second);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::int32_t, std::vector<std::uint32_t>> orbits;
    for (std::size_t i = 0; i < members.size(); ++i)
        orbits[find(static_cast<std::int32_t>(i))].push_back(members[i]);

    std::unordered_map<std::uint32_t, int> orbit_of_mask;
    std::vector<GammaClass> classes;
    for (auto& [root, masks] : orbits) {
        GammaClass c;
        c.rep = graph_from_edge_mask(el, masks.front());  // masks sorted ascending
        c.labelled_count = masks.size();
        c.switched_rep = switched_gamma(q, c.rep);
        c.aut_order = automorphism_group(c.rep).order;
        c.autq_order = autq_group(q, vq, c.rep).order;
        c.distinguishing = is_distinguishing(q, vq, c.rep);
        c.switching_distinguishing = is_switching_distinguishing(q, vq, c.rep);
        c.canon_g6 = canonical_label(c.rep).bytes;
        for (std::uint32_t m2 : masks) orbit_of_mask[m2] = static_cast<int>(classes.size());
        classes.push_back(std::move(c));
    }
    // complement pairing through the labelled complement of each representative
    std::vector<int> comp(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::uint32_t cm = ~edge_mask_of(el, classes[i].rep) & full;
        comp[i] = orbit_of_mask.at(cm);
    }
    // deterministic class order: canonical label, then representative mask
    std::vector<int> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (classes[x].canon_g6 != classes[y].canon_g6)
            return classes[x].canon_g6 < classes[y].canon_g6;
        return edge_mask_of(el, classes[x].rep) < edge_mask_of(el, classes[y].rep);
    });
    std::vector<int> newpos(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) newpos[order[i]] = static_cast<int>(i);
    SwitchingGraphSet sorted = out;
    sorted.classes.resize(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.classes[i] = std::move(classes[order[i]]);
        sorted.classes[i].complement_index = newpos[comp[order[i]]];
    }
    for (std::size_t i = 0; i + 1 < sorted.classes.size(); ++i)
        if (sorted.classes[i].canon_g6 == sorted.classes[i + 1].canon_g6)
            sorted.split_iso_class = true;
    return sorted;
}

int SwitchingGraphSet::class_of_canon(const std::string& g6) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].canon_g6 == g6) return static_cast<int>(i);
    return -1;
}

}  // namespace switchmate
