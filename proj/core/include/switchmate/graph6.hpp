// graph6 text format, bit-exact per the formats.txt specification.
// Only the single-byte header (n <= 62) is needed here, and decoding is
// further capped at 16 vertices.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "switchmate/graph.hpp"

namespace switchmate {

struct Graph6Error : std::runtime_error {
    std::size_t offset;  // byte position of the offending input byte
    Graph6Error(std::size_t off, const std::string& msg)
        : std::runtime_error("graph6: " + msg + " (byte offset " + std::to_string(off) + ")"),
          offset(off) {}
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace switchmate
