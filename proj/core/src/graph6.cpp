#include "switchmate/graph6.hpp"

namespace switchmate {

// Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
// packed MSB-first into 6-bit groups, each offset by 63.
std::string graph6_encode(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error(0, "empty input");
    const unsigned char hdr = static_cast<unsigned char>(text[0]);
    if (hdr == 126) throw Graph6Error(0, "multi-byte vertex counts are not supported");
    if (hdr < 63 || hdr > 125) throw Graph6Error(0, "header byte outside graph6 range");
    const int n = hdr - 63;
    if (n > kMaxVertices) throw Graph6Error(0, "vertex count exceeds 16");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes) throw Graph6Error(text.size(), "truncated adjacency data");
    if (text.size() > 1 + nbytes) throw Graph6Error(1 + nbytes, "trailing bytes after adjacency data");

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(text[1 + b]);
        if (c < 63 || c > 126) throw Graph6Error(1 + b, "data byte outside graph6 range");
        const int v = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const int on = (v >> k) & 1;
            if (bit >= nbits) {
                if (on) throw Graph6Error(1 + b, "nonzero padding bits");
                continue;
            }
            if (on) {
                // invert column-order index -> (i, j)
                std::size_t r = bit;
                int j = 1;
                while (r >= static_cast<std::size_t>(j)) {
                    r -= j;
                    ++j;
                }
                g.add_edge(static_cast<int>(r), j);
            }
        }
    }
    return g;
}

}  // namespace switchmate
