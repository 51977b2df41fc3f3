// Q-respecting vectors: the (0,1)-vectors v with Q^T v again a (0,1)-vector.
// These are the admissible attachment patterns of vertices outside a
// switching set, found by exhaustive scan with exact integer tests.
#pragma once

#include <cstdint>
#include <vector>

#include "switchmate/ratorth.hpp"

namespace switchmate {

// Vectors are bitmasks with bit i = coordinate i+1. The list is sorted
// lexicographically as coordinate tuples (v_1 most significant).
struct RespectingVectorSet {
    int m = 0;
    std::vector<std::uint16_t> vectors;
    std::vector<std::uint16_t> images;  // Q^T v, parallel to vectors
    std::vector<std::int16_t> index;    // 2^m lookup: mask -> position or -1

    bool contains(std::uint16_t v) const { return index[v] >= 0; }
    std::uint16_t image_of(std::uint16_t v) const {
        return images[static_cast<std::size_t>(index[v])];
    }
    std::size_t size() const { return vectors.size(); }
};

// Exhaustive scan over all 2^m vectors; m <= 10.
RespectingVectorSet respecting_vectors(const RationalOrthogonalMatrix& q);

// tuple-lexicographic order used for the sorted vector list
std::uint16_t lex_key(std::uint16_t mask, int m);

}  // namespace switchmate
