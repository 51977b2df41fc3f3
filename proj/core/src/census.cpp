#include "switchmate/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "switchmate/canonical.hpp"
#include "switchmate/charpoly.hpp"
#include "switchmate/formulas.hpp"
#include "switchmate/generate.hpp"
#include "switchmate/graph6.hpp"
#include "switchmate/switching.hpp"

namespace switchmate {

namespace {

constexpr std::uint64_t kCandidateGuard = 30'000'000;  // gates GM4 at n = 10

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct GammaTask {
    int class_index;
    Graph gamma;
    Graph gamma_switched;
    bool gamma_fixed;
    std::vector<int> first_column_choices;  // indices into vq.vectors
    std::vector<bool> vector_fixed;         // image == vector, per index
};

// indices of the lexicographically least member of each Aut_Q(Gamma) orbit
// on V_Q (the vector order is the index order)
std::vector<int> first_column_reps(const SwitchingMethod& method, const Graph& gamma) {
    const auto aq = autq_group(method.q, method.vq, gamma);
    std::vector<Perm> elems = aq.generators;
    elems.push_back(identity_perm());
    std::vector<int> reps;
    for (std::size_t i = 0; i < method.vq.size(); ++i) {
        const std::uint16_t v = method.vq.vectors[i];
        bool minimal = true;
        for (const Perm& s : elems) {
            const std::uint16_t img = permute_mask(v, s, method.m());
            if (method.vq.index[img] < static_cast<std::int16_t>(i)) {
                minimal = false;
                break;
            }
        }
        if (minimal) reps.push_back(static_cast<int>(i));
    }
    return reps;
}

struct WorkerOutput {
    std::vector<std::vector<std::string>> labels_per_task;
    std::uint64_t candidates = 0;
};

void scan_task(const SwitchingMethod& method, const GammaTask& task, const Graph& c,
               bool reduction, std::vector<std::string>& out, std::uint64_t& candidates) {
    const int m = method.m();
    const int n = m + c.n;
    const int cols = c.n;
    const auto& vq = method.vq;
    const int nv = static_cast<int>(vq.size());

    std::vector<int> all_choices;
    if (!reduction)
        for (int i = 0; i < nv; ++i) all_choices.push_back(i);
    const std::vector<int>& first_choices =
        reduction ? task.first_column_choices : all_choices;

    Graph base(n);
    for (int i = 0; i < m; ++i) base.adj[i] = task.gamma.adj[i];
    Graph base_sw(n);
    for (int i = 0; i < m; ++i) base_sw.adj[i] = task.gamma_switched.adj[i];
    for (int i = 0; i < cols; ++i) {
        const std::uint16_t row = static_cast<std::uint16_t>(c.adj[i] << m);
        base.adj[m + i] = row;
        base_sw.adj[m + i] = row;
    }

    auto check_candidate = [&](const Graph& a, const Graph& b) {
        const Graph ca = canonical_form(a).canon;
        const Graph cb = canonical_form(b).canon;
        if (ca == cb) return;
        out.push_back(graph6_encode(ca));
        out.push_back(graph6_encode(cb));
    };

    if (cols == 0) {
        ++candidates;
        if (!task.gamma_fixed) check_candidate(base, base_sw);
        return;
    }

    Graph a = base, b = base_sw;
    auto set_column = [&](int j, int vi) {
        const std::uint16_t v = vq.vectors[static_cast<std::size_t>(vi)];
        const std::uint16_t w = vq.images[static_cast<std::size_t>(vi)];
        const int y = m + j;
        const std::uint16_t ybit = static_cast<std::uint16_t>(1u << y);
        for (int i = 0; i < m; ++i) {
            const std::uint16_t bit = static_cast<std::uint16_t>(1u << i);
            if ((v >> i) & 1u) {
                a.adj[i] |= ybit;
                a.adj[y] |= bit;
            } else {
                a.adj[i] &= static_cast<std::uint16_t>(~ybit);
                a.adj[y] &= static_cast<std::uint16_t>(~bit);
            }
            if ((w >> i) & 1u) {
                b.adj[i] |= ybit;
                b.adj[y] |= bit;
            } else {
                b.adj[i] &= static_cast<std::uint16_t>(~ybit);
                b.adj[y] &= static_cast<std::uint16_t>(~bit);
            }
        }
    };

    std::vector<int> digit(static_cast<std::size_t>(cols), 0);
    for (int first : first_choices) {
        set_column(0, first);
        int unfixed = 0;  // unfixed columns among positions >= 1
        for (int j = 1; j < cols; ++j) {
            digit[static_cast<std::size_t>(j)] = 0;
            set_column(j, 0);
            if (!task.vector_fixed[0]) ++unfixed;
        }
        const bool head_fixed =
            task.gamma_fixed && task.vector_fixed[static_cast<std::size_t>(first)];
        for (;;) {
            ++candidates;
            if (!head_fixed || unfixed > 0) check_candidate(a, b);
            int j = 1;
            while (j < cols && digit[static_cast<std::size_t>(j)] == nv - 1) {
                if (!task.vector_fixed[static_cast<std::size_t>(nv - 1)]) --unfixed;
                digit[static_cast<std::size_t>(j)] = 0;
                set_column(j, 0);
                if (!task.vector_fixed[0]) ++unfixed;
                ++j;
            }
            if (j >= cols) break;
            const int old = digit[static_cast<std::size_t>(j)];
            if (!task.vector_fixed[static_cast<std::size_t>(old)]) --unfixed;
            ++digit[static_cast<std::size_t>(j)];
            set_column(j, digit[static_cast<std::size_t>(j)]);
            if (!task.vector_fixed[static_cast<std::size_t>(digit[static_cast<std::size_t>(j)])])
                ++unfixed;
        }
    }
}

void verify_soundness(const SwitchingMethod& method, const CensusJob& job,
                      const std::vector<std::string>& labels) {
    if (labels.empty()) return;
    std::vector<std::size_t> picks;
    if (job.n <= 8 || labels.size() <= 1000) {
        picks.resize(labels.size());
        for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
    } else {
        std::mt19937_64 rng(job.verify_seed);
        std::uniform_int_distribution<std::size_t> dist(0, labels.size() - 1);
        std::set<std::size_t> chosen;
        while (chosen.size() < 1000) chosen.insert(dist(rng));
        picks.assign(chosen.begin(), chosen.end());
    }
    for (std::size_t i : picks) {
        const Graph g = graph6_decode(labels[i]);
        const auto insts = find_switching_instances(g, method);
        bool mate_found = false;
        for (const auto& inst : insts) {
            const Graph h = apply_switching(g, method, inst);
            if (canonical_label(g) == canonical_label(h)) continue;
            if (!is_generalized_cospectral(g, h))
                throw std::logic_error("census: switched mate is not generalized cospectral");
            mate_found = true;
            break;
        }
        if (!mate_found)
            throw std::logic_error("census: emitted graph " + labels[i] +
                                   " has no verifiable mate");
    }
}

}  // namespace

std::uint64_t census_candidate_estimate(const MethodId& id, int n) {
    const SwitchingMethod& method = get_method(id);
    const int m = method.m();
    if (n < m) return 0;
    const std::uint64_t c_count =
        n == m ? 1 : static_cast<std::uint64_t>(static_cast<std::int64_t>(graph_count(n - m)));
    return method.census_reps.size() * c_count * ipow(method.vq.size(), n - m);
}

CensusReport run_census(const CensusJob& job) {
    const auto t0 = std::chrono::steady_clock::now();
    const SwitchingMethod& method = get_method(job.method);
    const int m = method.m();
    if (job.n > 10)
        throw ResourceGuardError("census: orders beyond 10 are not supported");
    if (job.n < m)
        throw std::invalid_argument("census: order smaller than the switching set");
    if (!job.allow_long && census_candidate_estimate(job.method, job.n) > kCandidateGuard)
        throw ResourceGuardError(
            "census: candidate count exceeds the default guard; pass allow_long to run it");

    std::vector<int> reps = method.census_reps;
    if (!job.gamma_filter.empty()) {
        std::vector<int> narrowed;
        for (int cls : job.gamma_filter) {
            if (cls < 0 || cls >= static_cast<int>(method.bq.classes.size()) ||
                !method.bq.classes[cls].in_method)
                throw std::invalid_argument("census: bad gamma class filter");
            const int partner = method.bq.classes[cls].complement_index;
            for (int r : method.census_reps)
                if (r == cls || r == partner) narrowed.push_back(r);
        }
        std::sort(narrowed.begin(), narrowed.end());
        narrowed.erase(std::unique(narrowed.begin(), narrowed.end()), narrowed.end());
        reps = narrowed;
    }

    std::vector<GammaTask> tasks;
    for (int cls : reps) {
        GammaTask t;
        t.class_index = cls;
        t.gamma = method.bq.classes[static_cast<std::size_t>(cls)].rep;
        t.gamma_switched = method.bq.classes[static_cast<std::size_t>(cls)].switched_rep;
        t.gamma_fixed = t.gamma == t.gamma_switched;
        t.first_column_choices = first_column_reps(method, t.gamma);
        t.vector_fixed.resize(method.vq.size());
        for (std::size_t i = 0; i < method.vq.size(); ++i)
            t.vector_fixed[i] = method.vq.vectors[i] == method.vq.images[i];
        tasks.push_back(std::move(t));
    }

    std::vector<Graph> cs;
    if (job.n == m) {
        cs.emplace_back(0);
    } else {
        cs = generate_all_graphs(job.n - m);
    }

    int workers = job.worker_count > 0
                      ? job.worker_count
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    struct Unit {
        int task;
        int c_index;
    };
    std::vector<Unit> units;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (std::size_t ci = 0; ci < cs.size(); ++ci)
            units.push_back({static_cast<int>(t), static_cast<int>(ci)});

    std::vector<WorkerOutput> outs(static_cast<std::size_t>(workers));
    for (auto& o : outs) o.labels_per_task.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
        auto& mine = outs[static_cast<std::size_t>(w)];
        for (;;) {
            const std::size_t u = next.fetch_add(1);
            if (u >= units.size()) break;
            const Unit unit = units[u];
            scan_task(method, tasks[static_cast<std::size_t>(unit.task)],
                      cs[static_cast<std::size_t>(unit.c_index)], job.symmetry_reduction,
                      mine.labels_per_task[static_cast<std::size_t>(unit.task)],
                      mine.candidates);
        }
    };
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    CensusReport rep;
    rep.method = job.method;
    rep.n = job.n;

    std::vector<std::string> all;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        std::vector<std::string> task_labels;
        for (auto& o : outs)
            task_labels.insert(task_labels.end(), o.labels_per_task[t].begin(),
                               o.labels_per_task[t].end());
        std::sort(task_labels.begin(), task_labels.end());
        task_labels.erase(std::unique(task_labels.begin(), task_labels.end()),
                          task_labels.end());
        rep.per_gamma.emplace_back(
            method.bq.classes[static_cast<std::size_t>(tasks[t].class_index)].canon_g6,
            task_labels.size());
        all.insert(all.end(), task_labels.begin(), task_labels.end());
    }
    for (auto& o : outs) rep.candidates_examined += o.candidates;

    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    {
        // the complement of every mate-possessing graph has a mate as well
        std::vector<std::string> comp;
        comp.reserve(all.size());
        for (const std::string& lbl : all)
            comp.push_back(graph6_encode(canonical_form(graph6_decode(lbl).complement()).canon));
        all.insert(all.end(), comp.begin(), comp.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
    }
    if (job.emit_graphs && all.size() > job.emit_cap)
        throw ResourceGuardError("census: canonical set exceeds the configured cap");

    rep.count = all.size();
    rep.fraction = Rat(static_cast<Int128>(all.size()), graph_count(job.n));
    verify_soundness(method, job, all);
    if (job.emit_graphs) rep.canonical_set = std::move(all);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

OverlapReport overlap_report(const std::vector<CensusJob>& jobs) {
    if (jobs.empty()) throw std::invalid_argument("overlap: no jobs");
    OverlapReport out;
    out.n = jobs[0].n;
    std::vector<std::vector<std::string>> sets;
    for (CensusJob job : jobs) {
        if (job.n != out.n) throw std::invalid_argument("overlap: jobs must share the order");
        job.emit_graphs = true;
        CensusReport rep = run_census(job);
        out.methods.push_back(job.method);
        sets.push_back(std::move(rep.canonical_set));
    }
    const int k = static_cast<int>(sets.size());
    std::int64_t ie = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) subset.push_back(i);
        std::vector<std::string> inter = sets[static_cast<std::size_t>(subset[0])];
        for (std::size_t i = 1; i < subset.size(); ++i) {
            std::vector<std::string> tmp;
            std::set_intersection(inter.begin(), inter.end(),
                                  sets[static_cast<std::size_t>(subset[i])].begin(),
                                  sets[static_cast<std::size_t>(subset[i])].end(),
                                  std::back_inserter(tmp));
            inter = std::move(tmp);
        }
        out.intersections[subset] = inter.size();
        ie += (subset.size() % 2 == 1 ? 1 : -1) * static_cast<std::int64_t>(inter.size());
    }
    out.union_inclusion_exclusion = static_cast<std::uint64_t>(ie);
    return out;
}

std::string fraction_report(const CensusReport& report) {
    return decimal_round_half_even(report.fraction, 3);
}

FormulaComparison formula_comparison(const CensusReport& report) {
    FormulaComparison out;
    out.census = static_cast<Int128>(report.count);
    out.formula = asymptotic_main_term_rounded(get_method(report.method), report.n);
    if (out.formula == 0) {
        out.ratio = "0.000";
    } else {
        out.ratio = decimal_round_half_even(Rat(out.census, out.formula), 3);
    }
    return out;
}

}  // namespace switchmate
