// Exact integer characteristic polynomials of adjacency matrices. Spectra are
// compared only through these coefficient vectors, never through floating
// point eigenvalues.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "switchmate/graph.hpp"

namespace switchmate {

struct CharPoly {
    // coeffs[k] multiplies x^(n-k); coeffs[0] == 1, coeffs[1] == 0 (zero trace).
    std::vector<std::int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
    std::string to_string() const;  // e.g. "x^3 - 3x - 2"
};

CharPoly char_poly(const Graph& g);

inline bool is_cospectral(const Graph& g, const Graph& h) {
    return char_poly(g) == char_poly(h);
}

inline bool is_generalized_cospectral(const Graph& g, const Graph& h) {
    return is_cospectral(g, h) && is_cospectral(g.complement(), h.complement());
}

}  // namespace switchmate
