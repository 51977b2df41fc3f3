#include "switchmate/method.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "switchmate/canonical.hpp"

namespace switchmate {

Graph ah6_gamma() {
    // blocks {0,1}, {2,3}, {4,5}; triangle on {1,3,5} with pendants 2,4,0
    return graph_from_edges(6, {{1, 3}, {3, 5}, {1, 5}, {1, 2}, {3, 4}, {5, 0}});
}

Graph fano_gamma_cycle() { return cycle_graph(7); }

Graph fano_gamma_dense() {
    return graph_from_edges(
        7, {{3, 2}, {3, 4}, {5, 0}, {5, 2}, {5, 4}, {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 5}});
}

std::vector<MethodId> named_methods() {
    using F = MethodId::Family;
    return {MethodId::named(F::GM4),  MethodId::named(F::WQH6), MethodId::named(F::GM6),
            MethodId::named(F::AH6),  MethodId::named(F::FANO), MethodId::named(F::WQH8),
            MethodId::named(F::GM8)};
}

namespace {

void mark_in_method(SwitchingMethod& meth) {
    using F = MethodId::Family;
    if (meth.id.family != F::AH6 && meth.id.family != F::FANO) return;
    std::set<std::string> keep;
    if (meth.id.family == F::AH6) {
        keep.insert(canonical_label(ah6_gamma()).bytes);
        keep.insert(canonical_label(ah6_gamma().complement()).bytes);
    } else {
        keep.insert(canonical_label(fano_gamma_cycle()).bytes);
        keep.insert(canonical_label(fano_gamma_cycle().complement()).bytes);
        keep.insert(canonical_label(fano_gamma_dense()).bytes);
        keep.insert(canonical_label(fano_gamma_dense().complement()).bytes);
    }
    for (auto& c : meth.bq.classes) c.in_method = keep.count(c.canon_g6) > 0;
}

void pick_census_reps(SwitchingMethod& meth) {
    std::vector<bool> taken(meth.bq.classes.size(), false);
    for (std::size_t i = 0; i < meth.bq.classes.size(); ++i) {
        const auto& c = meth.bq.classes[i];
        if (!c.in_method || taken[i]) continue;
        const int partner = c.complement_index;
        if (!meth.bq.classes[partner].in_method)
            throw std::logic_error("method: complement pair straddles the in-method boundary");
        meth.census_reps.push_back(static_cast<int>(i));
        taken[i] = true;
        taken[partner] = true;
    }
}

}  // namespace

const SwitchingMethod& get_method(const MethodId& id, int threads) {
    static std::mutex mu;
    static std::map<MethodId, std::unique_ptr<SwitchingMethod>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return *it->second;

    auto meth = std::make_unique<SwitchingMethod>();
    meth->id = id;
    meth->q = build_named(id);
    meth->vq = respecting_vectors(meth->q);
    if (meth->q.m > 8)
        throw std::invalid_argument("method: switching-graph enumeration needs dimension <= 8");
    meth->bq = switching_graphs(meth->q, meth->vq, threads);
    mark_in_method(*meth);
    pick_census_reps(*meth);
    auto [pos, ok] = cache.emplace(id, std::move(meth));
    (void)ok;
    return *pos->second;
}

}  // namespace switchmate
