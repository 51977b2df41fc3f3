// Block-form enumeration of all order-n graphs admitting a (Q,Gamma)-
// switching, per method: assemble A = [[A(Gamma), V], [V^T, C]] over one
// switching graph per complement pair, all C in the order-(n-m) catalog and
// all respecting columns V, switch, keep non-isomorphic images, deduplicate
// by canonical label, and close under complementation.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "switchmate/method.hpp"
#include "switchmate/rational.hpp"

namespace switchmate {

struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusJob {
    MethodId method;
    int n = 0;
    std::vector<int> gamma_filter;   // class indices; empty = all in-method classes
    int worker_count = 0;            // 0 = hardware concurrency
    bool emit_graphs = false;
    bool allow_long = false;         // unlocks jobs beyond the candidate guard
    bool symmetry_reduction = true;  // first-column Aut_Q orbit restriction
    std::uint64_t emit_cap = 20'000'000;  // canonical-set size guard
    std::uint64_t verify_seed = 12345;    // soundness spot-check sampling
};

struct CensusReport {
    MethodId method;
    int n = 0;
    std::uint64_t count = 0;
    Rat fraction;  // count / g_n
    std::vector<std::string> canonical_set;              // sorted, only with emit_graphs
    std::vector<std::pair<std::string, std::uint64_t>> per_gamma;  // class label -> labels found
    std::uint64_t candidates_examined = 0;
    double wall_seconds = 0.0;
};

// Deterministic for any worker count. Throws ResourceGuardError when n > 10
// or the candidate estimate exceeds the guard without allow_long.
CensusReport run_census(const CensusJob& job);

struct OverlapReport {
    int n = 0;
    std::vector<MethodId> methods;
    std::map<std::vector<int>, std::uint64_t> intersections;  // method index subsets
    std::uint64_t union_inclusion_exclusion = 0;
};

OverlapReport overlap_report(const std::vector<CensusJob>& jobs);

// count / g_n to three decimals, ties to even.
std::string fraction_report(const CensusReport& report);

struct FormulaComparison {
    Int128 census = 0;
    Int128 formula = 0;     // rounded main term
    std::string ratio;      // census / formula to three decimals
};

FormulaComparison formula_comparison(const CensusReport& report);

// Estimated candidate count for the guard (post complement-pair halving).
std::uint64_t census_candidate_estimate(const MethodId& id, int n);

}  // namespace switchmate
