#include "switchmate/respecting.hpp"

#include <algorithm>

namespace switchmate {

std::uint16_t lex_key(std::uint16_t mask, int m) {
    std::uint16_t key = 0;
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) key |= static_cast<std::uint16_t>(1u << (m - 1 - i));
    return key;
}

RespectingVectorSet respecting_vectors(const RationalOrthogonalMatrix& q) {
    if (q.m > 10) throw std::invalid_argument("respecting_vectors: dimension > 10");
    RespectingVectorSet out;
    out.m = q.m;
    out.index.assign(std::size_t{1} << q.m, -1);
    const std::int64_t l = q.level;
    for (std::uint32_t v = 0; v < (1u << q.m); ++v) {
        std::uint16_t img = 0;
        bool ok = true;
        for (int j = 0; j < q.m && ok; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < q.m; ++i)
                if ((v >> i) & 1u) s += q.scaled.at(i, j);  // (Q^T v)_j scaled by l
            if (s == l)
                img |= static_cast<std::uint16_t>(1u << j);
            else if (s != 0)
                ok = false;
        }
        if (ok) {
            out.vectors.push_back(static_cast<std::uint16_t>(v));
            out.images.push_back(img);
        }
    }
    std::vector<std::size_t> order(out.vectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return lex_key(out.vectors[x], q.m) < lex_key(out.vectors[y], q.m);
    });
    std::vector<std::uint16_t> vs, is;
    vs.reserve(order.size());
    is.reserve(order.size());
    for (std::size_t i : order) {
        vs.push_back(out.vectors[i]);
        is.push_back(out.images[i]);
    }
    out.vectors = std::move(vs);
    out.images = std::move(is);
    for (std::size_t i = 0; i < out.vectors.size(); ++i)
        out.index[out.vectors[i]] = static_cast<std::int16_t>(i);
    return out;
}

}  // namespace switchmate
