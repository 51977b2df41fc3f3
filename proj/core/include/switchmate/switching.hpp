// Applying and detecting (Q,Gamma)-switchings on host graphs, plus the GM and
// WQH combinatorial validators. Instance validation failures are structured:
// tests and the CLI report the violated condition with the vertex involved.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchmate/graph.hpp"
#include "switchmate/method.hpp"

namespace switchmate {

enum class ValidationFail {
    TupleSize,
    TupleVertexRange,
    TupleDuplicate,
    TupleMismatch,                  // induced subgraph is not a usable switching graph
    GammaClassMismatch,             // induced class differs from the declared one
    ExternalVertexNotRespecting,    // attachment vector outside V_Q
};

struct ValidationError : std::runtime_error {
    ValidationFail kind;
    int vertex;  // offending vertex id, or -1
    ValidationError(ValidationFail k, int v, const std::string& msg)
        : std::runtime_error(msg), kind(k), vertex(v) {}
};

struct SwitchingInstance {
    MethodId method;
    std::vector<int> tuple;        // ordered switching tuple
    int gamma_index = -1;          // class index in the method's switching-graph set
    std::uint64_t orbit_count = 1; // tuples equivalent under Aut_Q(Gamma)
};

// All instance classes on g: valid ordered tuples up to the Aut_Q(Gamma)
// orbit, with the orbit size attached.
std::vector<SwitchingInstance> find_switching_instances(const Graph& g,
                                                        const SwitchingMethod& method);

// Conjugate by Q on the tuple; validates the instance and throws
// ValidationError with the first violated condition.
Graph apply_switching(const Graph& g, const SwitchingMethod& method,
                      std::span<const int> tuple);
Graph apply_switching(const Graph& g, const SwitchingMethod& method,
                      const SwitchingInstance& inst);

// Generic form for an arbitrary regular rational orthogonal matrix (used for
// the Q^T round-trip property); same validation rules, no class bookkeeping.
Graph apply_switching_q(const Graph& g, const RationalOrthogonalMatrix& q,
                        std::span<const int> tuple);

// Theorem-level combinatorial conditions checked directly on degrees.
bool validate_gm_conditions(const Graph& g, std::span<const int> x);
bool validate_wqh_conditions(const Graph& g, std::span<const int> c0, std::span<const int> c1);

// JSON certificate {method, tuple, gamma: graph6 of the labelled Gamma}.
std::string instance_to_json(const Graph& g, const SwitchingInstance& inst);

}  // namespace switchmate
