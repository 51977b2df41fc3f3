#include "switchmate/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "switchmate/graph6.hpp"

namespace switchmate {

namespace {

// ---------------------------------------------------------------- partition

// Ordered partition of the vertices: `seq` lists them, `cell_start[p]` marks
// positions that begin a cell.
struct Partition {
    int n = 0;
    std::array<std::uint8_t, kMaxVertices> seq{};
    std::array<bool, kMaxVertices> cell_start{};

    bool discrete() const {
        for (int p = 0; p < n; ++p)
            if (!cell_start[p]) return false;
        return true;
    }

    int cell_end(int s) const {
        int e = s + 1;
        while (e < n && !cell_start[e]) ++e;
        return e;
    }
};

std::uint16_t slice_mask(const Partition& pi, int s, int e) {
    std::uint16_t m = 0;
    for (int p = s; p < e; ++p) m |= static_cast<std::uint16_t>(1u << pi.seq[p]);
    return m;
}

// Refine to the coarsest equitable partition reachable from `pi`, splitting
// cells by neighbor counts into the splitter masks on the worklist. The
// procedure depends only on the partition structure and adjacency counts, so
// it commutes with relabeling.
void refine(const Graph& g, Partition& pi, std::vector<std::uint16_t>& worklist) {
    while (!worklist.empty()) {
        const std::uint16_t w = worklist.back();
        worklist.pop_back();
        for (int s = 0; s < pi.n;) {
            const int e = pi.cell_end(s);
            if (e - s > 1) {
                int cnt[kMaxVertices];
                bool uniform = true;
                cnt[0] = std::popcount(static_cast<unsigned>(g.adj[pi.seq[s]] & w));
                for (int p = s + 1; p < e; ++p) {
                    cnt[p - s] = std::popcount(static_cast<unsigned>(g.adj[pi.seq[p]] & w));
                    if (cnt[p - s] != cnt[0]) uniform = false;
                }
                if (!uniform) {
                    std::array<std::uint8_t, kMaxVertices> verts;
                    for (int p = s; p < e; ++p) verts[p - s] = pi.seq[p];
                    const int len = e - s;
                    std::stable_sort(verts.begin(), verts.begin() + len,
                                     [&](std::uint8_t a, std::uint8_t b) {
                                         return std::popcount(static_cast<unsigned>(g.adj[a] & w)) <
                                                std::popcount(static_cast<unsigned>(g.adj[b] & w));
                                     });
                    int frag_start = s;
                    int prev = std::popcount(static_cast<unsigned>(g.adj[verts[0]] & w));
                    for (int p = 0; p < len; ++p) {
                        pi.seq[s + p] = verts[p];
                        const int c = std::popcount(static_cast<unsigned>(g.adj[verts[p]] & w));
                        if (c != prev) {
                            pi.cell_start[s + p] = true;
                            worklist.push_back(slice_mask(pi, frag_start, s + p));
                            frag_start = s + p;
                            prev = c;
                        }
                    }
                    worklist.push_back(slice_mask(pi, frag_start, e));
                }
            }
            s = e;
        }
    }
}

std::uint64_t node_invariant(const Graph& g, const Partition& pi) {
    // cell sizes plus the quotient degree matrix; equitable partitions make
    // the per-cell representative counts well defined
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    std::uint16_t masks[kMaxVertices];
    std::uint8_t firsts[kMaxVertices];
    int ncells = 0;
    for (int s = 0; s < pi.n;) {
        const int e = pi.cell_end(s);
        masks[ncells] = slice_mask(pi, s, e);
        firsts[ncells] = pi.seq[s];
        mix(static_cast<std::uint64_t>(e - s));
        ++ncells;
        s = e;
    }
    for (int i = 0; i < ncells; ++i)
        for (int j = 0; j < ncells; ++j)
            mix(static_cast<std::uint64_t>(
                std::popcount(static_cast<unsigned>(g.adj[firsts[i]] & masks[j]))));
    return h;
}

// ------------------------------------------------------------------- search

struct UnionFind {
    std::array<std::uint8_t, kMaxVertices> parent;
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
};

struct Searcher {
    const Graph& g;
    int n;

    bool have_best = false;
    Graph best_graph;
    Perm best_perm{};                 // vertex -> canonical position
    std::vector<std::uint64_t> best_inv;
    std::vector<std::uint64_t> cur_inv;

    std::vector<Perm> gens;
    std::array<std::uint8_t, kMaxVertices> base{};
    int base_len = 0;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n) {}

    Perm leaf_perm(const Partition& pi) const {
        Perm p = identity_perm();
        for (int pos = 0; pos < n; ++pos) p[pi.seq[pos]] = static_cast<std::uint8_t>(pos);
        return p;
    }

    void handle_leaf(const Partition& pi) {
        const Perm lp = leaf_perm(pi);
        const Graph cand = g.permuted(lp);
        if (!have_best) {
            have_best = true;
            best_graph = cand;
            best_perm = lp;
            best_inv = cur_inv;
            return;
        }
        if (cand == best_graph) {
            // two orderings produce the same labeled graph: an automorphism
            const Perm sigma = compose(inverse(best_perm), lp);
            bool id = true;
            for (int i = 0; i < n && id; ++i) id = sigma[i] == i;
            if (!id) gens.push_back(sigma);
            return;
        }
        const bool better =
            std::lexicographical_compare(cand.adj.begin(), cand.adj.begin() + n,
                                         best_graph.adj.begin(), best_graph.adj.begin() + n);
        if (better) {
            best_graph = cand;
            best_perm = lp;
            best_inv = cur_inv;
        }
    }

    void explore(Partition pi, std::vector<std::uint16_t> worklist) {
        refine(g, pi, worklist);
        const int depth = static_cast<int>(cur_inv.size());
        const std::uint64_t inv = node_invariant(g, pi);
        if (have_best && depth < static_cast<int>(best_inv.size())) {
            if (inv > best_inv[depth]) return;  // strictly worse path
            if (inv < best_inv[depth]) have_best = false;  // strictly better: restart best
        }
        cur_inv.push_back(inv);
        if (pi.discrete()) {
            handle_leaf(pi);
            cur_inv.pop_back();
            return;
        }

        // first smallest non-singleton cell
        int ts = -1, te = -1, tlen = kMaxVertices + 1;
        for (int s = 0; s < n;) {
            const int e = pi.cell_end(s);
            if (e - s > 1 && e - s < tlen) {
                ts = s;
                te = e;
                tlen = e - s;
            }
            s = e;
        }

        std::array<std::uint8_t, kMaxVertices> cell{};
        for (int p = ts; p < te; ++p) cell[p - ts] = pi.seq[p];

        std::uint32_t tried_reps = 0;  // orbit representatives already explored
        for (int c = 0; c < tlen; ++c) {
            const int v = cell[c];
            // orbit pruning with the automorphisms that fix the current base
            UnionFind uf;
            uf.init(n);
            for (const Perm& s : gens) {
                bool fixes = true;
                for (int i = 0; i < base_len && fixes; ++i) fixes = s[base[i]] == base[i];
                if (!fixes) continue;
                for (int x = 0; x < n; ++x) uf.unite(x, s[x]);
            }
            const int rep = uf.find(v);
            if (tried_reps & (1u << rep)) continue;
            tried_reps |= 1u << rep;

            Partition child = pi;
            child.seq[ts] = static_cast<std::uint8_t>(v);
            int q = ts + 1;
            for (int p = 0; p < tlen; ++p)
                if (cell[p] != v) child.seq[q++] = cell[p];
            child.cell_start[ts + 1] = true;

            base[base_len++] = static_cast<std::uint8_t>(v);
            std::vector<std::uint16_t> wl;
            wl.push_back(static_cast<std::uint16_t>(1u << v));
            wl.push_back(slice_mask(child, ts + 1, te));
            explore(child, std::move(wl));
            --base_len;
        }
        cur_inv.pop_back();
    }
};

Partition initial_partition(const Graph& g, const Coloring* coloring) {
    Partition pi;
    pi.n = g.n;
    if (coloring == nullptr || coloring->empty()) {
        for (int i = 0; i < g.n; ++i) pi.seq[i] = static_cast<std::uint8_t>(i);
        pi.cell_start[0] = true;
        return pi;
    }
    std::array<bool, kMaxVertices> seen{};
    int pos = 0;
    for (const auto& cls : *coloring) {
        if (cls.empty()) throw std::invalid_argument("coloring: empty color class");
        pi.cell_start[pos] = true;
        for (int v : cls) {
            if (v < 0 || v >= g.n || seen[v])
                throw std::invalid_argument("coloring: not a partition of the vertex set");
            seen[v] = true;
            pi.seq[pos++] = static_cast<std::uint8_t>(v);
        }
    }
    if (pos != g.n) throw std::invalid_argument("coloring: not a partition of the vertex set");
    return pi;
}

CanonResult run_search(const Graph& g, const Coloring* coloring) {
    if (!g.valid()) throw std::invalid_argument("canonical_form: invalid graph");
    CanonResult res;
    if (g.n == 0) {
        res.canon = g;
        res.to_canon = identity_perm();
        return res;
    }
    Partition pi = initial_partition(g, coloring);
    Searcher s(g);
    std::vector<std::uint16_t> wl;
    for (int p = 0; p < pi.n;) {
        const int e = pi.cell_end(p);
        wl.push_back(slice_mask(pi, p, e));
        p = e;
    }
    s.explore(pi, std::move(wl));
    res.canon = s.best_graph;
    res.to_canon = s.best_perm;
    res.aut.generators = std::move(s.gens);
    res.aut.order = permutation_group_order(res.aut.generators, g.n);
    return res;
}

// -------------------------------------------------------------- group order

struct StabChain {
    int n = 0;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;        // level i: fix base[0..i-1]
    std::vector<std::array<int, kMaxVertices>> pos;  // orbit position or -1
    std::vector<std::vector<Perm>> trans;       // coset reps: trans maps base[i] -> point
    std::vector<std::vector<int>> orbit;

    bool is_identity(const Perm& p) const {
        for (int i = 0; i < n; ++i)
            if (p[i] != i) return false;
        return true;
    }

    void push_level(int point) {
        base.push_back(point);
        gens.emplace_back();
        pos.emplace_back();
        trans.emplace_back();
        orbit.emplace_back();
    }

    void rebuild_orbit(int lvl) {
        pos[lvl].fill(-1);
        orbit[lvl].clear();
        trans[lvl].clear();
        const int b = base[lvl];
        pos[lvl][b] = 0;
        orbit[lvl].push_back(b);
        trans[lvl].push_back(identity_perm());
        for (std::size_t k = 0; k < orbit[lvl].size(); ++k) {
            const int p = orbit[lvl][k];
            for (const Perm& s : gens[lvl]) {
                const int q = s[p];
                if (pos[lvl][q] < 0) {
                    pos[lvl][q] = static_cast<int>(orbit[lvl].size());
                    orbit[lvl].push_back(q);
                    trans[lvl].push_back(compose(s, trans[lvl][static_cast<std::size_t>(pos[lvl][p])]));
                }
            }
        }
    }

    // Strip g through levels >= from; returns the residue and the level where
    // it stuck (== base.size() when it moves no current base point).
    std::pair<Perm, int> sift(Perm gperm, int from) const {
        for (int i = from; i < static_cast<int>(base.size()); ++i) {
            const int x = gperm[base[i]];
            if (pos[i][x] < 0) return {gperm, i};
            gperm = compose(inverse(trans[i][static_cast<std::size_t>(pos[i][x])]), gperm);
        }
        return {gperm, static_cast<int>(base.size())};
    }

    void schreier_sims(int lvl) {
        rebuild_orbit(lvl);
        for (std::size_t k = 0; k < orbit[lvl].size(); ++k) {
            const int p = orbit[lvl][k];
            for (std::size_t si = 0; si < gens[lvl].size(); ++si) {
                const Perm& s = gens[lvl][si];
                const Perm up = trans[lvl][static_cast<std::size_t>(pos[lvl][p])];
                const Perm usp = trans[lvl][static_cast<std::size_t>(pos[lvl][s[p]])];
                const Perm schreier = compose(inverse(usp), compose(s, up));
                auto [res, at] = sift(schreier, lvl + 1);
                if (is_identity(res)) continue;
                if (at == static_cast<int>(base.size())) {
                    int moved = 0;
                    while (res[moved] == moved) ++moved;
                    push_level(moved);
                }
                gens[static_cast<std::size_t>(at)].push_back(res);
                schreier_sims(at);
            }
        }
    }
};

}  // namespace

struct PermGroup::Impl {
    int n;
    std::vector<Perm> gens;
    StabChain chain;
    bool built = false;

    void build() {
        chain = StabChain{};
        chain.n = n;
        built = true;
        if (gens.empty()) return;
        int moved = 0;
        while (gens[0][moved] == moved) ++moved;
        chain.push_level(moved);
        chain.gens[0] = gens;
        chain.schreier_sims(0);
    }
};

PermGroup::PermGroup(int n) : impl_(std::make_unique<Impl>()) {
    impl_->n = n;
    impl_->build();
}
PermGroup::~PermGroup() = default;
PermGroup::PermGroup(PermGroup&&) noexcept = default;
PermGroup& PermGroup::operator=(PermGroup&&) noexcept = default;

bool PermGroup::contains(const Perm& p) const {
    if (!impl_->built || impl_->gens.empty()) {
        for (int i = 0; i < impl_->n; ++i)
            if (p[i] != i) return false;
        return true;
    }
    auto [res, at] = impl_->chain.sift(p, 0);
    return impl_->chain.is_identity(res);
}

void PermGroup::add(const Perm& p) {
    if (contains(p)) return;
    impl_->gens.push_back(p);
    impl_->build();
}

std::uint64_t PermGroup::order() const {
    if (impl_->gens.empty()) return 1;
    std::uint64_t o = 1;
    for (const auto& orb : impl_->chain.orbit) o *= orb.size();
    return o;
}

const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }

std::uint64_t permutation_group_order(const std::vector<Perm>& generators, int n) {
    std::vector<Perm> nontrivial;
    for (const Perm& p : generators) {
        bool id = true;
        for (int i = 0; i < n && id; ++i) id = p[i] == i;
        if (!id) nontrivial.push_back(p);
    }
    if (nontrivial.empty()) return 1;
    StabChain c;
    c.n = n;
    int moved = 0;
    while (nontrivial[0][moved] == moved) ++moved;
    c.push_level(moved);
    c.gens[0] = std::move(nontrivial);
    c.schreier_sims(0);
    std::uint64_t order = 1;
    for (const auto& orb : c.orbit) order *= orb.size();
    return order;
}

std::array<std::uint8_t, kMaxVertices> vertex_orbits(const std::vector<Perm>& gens, int n) {
    UnionFind uf;
    uf.init(n);
    for (const Perm& s : gens)
        for (int x = 0; x < n; ++x) uf.unite(x, s[x]);
    std::array<std::uint8_t, kMaxVertices> rep{};
    for (int x = 0; x < n; ++x) rep[x] = static_cast<std::uint8_t>(uf.find(x));
    return rep;
}

CanonResult canonical_form(const Graph& g) { return run_search(g, nullptr); }

CanonResult canonical_form(const Graph& g, const Coloring& coloring) {
    return run_search(g, &coloring);
}

CanonicalLabel canonical_label(const Graph& g) {
    return CanonicalLabel{graph6_encode(canonical_form(g).canon)};
}

CanonicalLabel canonical_label(const Graph& g, const Coloring& coloring) {
    CanonResult r = canonical_form(g, coloring);
    std::string bytes = graph6_encode(r.canon);
    bytes += "#";
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        if (i) bytes += ",";
        bytes += std::to_string(coloring[i].size());
    }
    return CanonicalLabel{std::move(bytes)};
}

AutomorphismGroup automorphism_group(const Graph& g) {
    return canonical_form(g).aut;
}

}  // namespace switchmate
