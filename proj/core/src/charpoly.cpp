#include "switchmate/charpoly.hpp"

#include <stdexcept>

namespace switchmate {

namespace {

using I128 = __int128;

// Berkowitz's division-free algorithm on the leading principal submatrices.
// All intermediates are sums of signed minors, which for 0/1 matrices of
// order <= 16 stay far below the int64 range; accumulate in 128 bits and
// narrow once at the end.
std::vector<I128> berkowitz(const Graph& g) {
    const int n = g.n;
    std::vector<I128> c{1};
    if (n == 0) return c;
    std::vector<I128> a(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? 1 : 0;

    for (int k = 1; k <= n; ++k) {
        // Toeplitz column: 1, -a_kk, -R S, -R M S, -R M^2 S, ...
        // with M the (k-1)x(k-1) leading block, R the row, S the column.
        std::vector<I128> t(static_cast<std::size_t>(k) + 1);
        t[0] = 1;
        t[1] = -a[static_cast<std::size_t>(k - 1) * n + (k - 1)];
        std::vector<I128> v(static_cast<std::size_t>(k - 1));
        for (int i = 0; i < k - 1; ++i) v[i] = a[static_cast<std::size_t>(i) * n + (k - 1)];
        for (int j = 2; j <= k; ++j) {
            I128 rv = 0;
            for (int i = 0; i < k - 1; ++i) rv += a[static_cast<std::size_t>(k - 1) * n + i] * v[i];
            t[j] = -rv;
            if (j < k) {
                std::vector<I128> w(static_cast<std::size_t>(k - 1), 0);
                for (int i = 0; i < k - 1; ++i) {
                    I128 s = 0;
                    for (int l = 0; l < k - 1; ++l) s += a[static_cast<std::size_t>(i) * n + l] * v[l];
                    w[i] = s;
                }
                v.swap(w);
            }
        }
        std::vector<I128> nc(static_cast<std::size_t>(k) + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < static_cast<int>(c.size()); ++j)
                if (i - j >= 0 && i - j <= k) nc[i] += t[i - j] * c[j];
        // nc = T * c, but T is lower-triangular Toeplitz: entry (i,j) = t[i-j]
        c.swap(nc);
    }
    return c;
}

}  // namespace

CharPoly char_poly(const Graph& g) {
    auto wide = berkowitz(g);
    CharPoly p;
    p.coeffs.reserve(wide.size());
    for (I128 x : wide) {
        if (x > I128(INT64_MAX) || x < I128(INT64_MIN))
            throw std::overflow_error("char_poly: coefficient exceeds 64 bits");
        p.coeffs.push_back(static_cast<std::int64_t>(x));
    }
    return p;
}

std::string CharPoly::to_string() const {
    const int n = degree();
    std::string s;
    for (int k = 0; k <= n; ++k) {
        const std::int64_t c = coeffs[k];
        if (c == 0) continue;
        const int e = n - k;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        const std::int64_t m = c < 0 ? -c : c;
        if (m != 1 || e == 0) s += std::to_string(m);
        if (e >= 1) s += "x";
        if (e >= 2) s += "^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    return s;
}

}  // namespace switchmate
