// Exact rational orthogonal matrices stored as integer matrix / level, the
// Q(a,b,c) block-circulant family, the Fano matrix, and the predicates the
// switching calculus needs. All arithmetic is exact integer arithmetic on
// the scaled matrix.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchmate/graph.hpp"

namespace switchmate {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> a;  // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMat transposed() const {
        IntMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols != o.rows) throw std::invalid_argument("IntMat: dimension mismatch");
        IntMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const std::int64_t x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    bool operator==(const IntMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct MethodId {
    enum class Family { GM4, GM6, GM8, WQH6, WQH8, AH6, FANO, QABC };
    Family family = Family::GM4;
    int a = 0, b = 0, c = 0;  // set for QABC

    static MethodId named(Family f) { return MethodId{f, 0, 0, 0}; }
    static MethodId qabc(int a, int b, int c);
    static MethodId parse(const std::string& text);  // "GM4", "Fano", "Q(3,2,-1)"

    int dimension() const;
    std::string to_string() const;
    bool operator==(const MethodId& o) const {
        return family == o.family && a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const MethodId& o) const;
};

struct RationalOrthogonalMatrix {
    int m = 0;           // dimension
    IntMat scaled;       // level * Q, integral
    std::int64_t level = 1;  // minimal positive integer with level*Q integral

    RationalOrthogonalMatrix transposed() const {
        return RationalOrthogonalMatrix{m, scaled.transposed(), level};
    }
    std::string to_string() const;  // fraction grid for debugging
};

RationalOrthogonalMatrix build_qabc(int a, int b, int c);
RationalOrthogonalMatrix build_named(const MethodId& id);

bool is_orthogonal(const RationalOrthogonalMatrix& q);
bool is_regular(const RationalOrthogonalMatrix& q);       // constant row sum
bool has_integral_column(const RationalOrthogonalMatrix& q);

// least l such that l * (M / denom) is integral
std::int64_t level_of(const IntMat& m, std::int64_t denom);

// U = P^T V R for permutation matrices P, R; returns (row map, column map)
// with U[i][j] == V[p[i]][r[j]], or nullopt.
std::optional<std::pair<Perm, Perm>> permutation_equivalent(const IntMat& u, const IntMat& v);

inline std::optional<std::pair<Perm, Perm>> permutation_equivalent(
    const RationalOrthogonalMatrix& u, const RationalOrthogonalMatrix& v) {
    if (u.m != v.m || u.level != v.level) {
        if (u.m != v.m) throw std::invalid_argument("permutation_equivalent: dimension mismatch");
        return std::nullopt;  // different minimal levels can never be equivalent
    }
    return permutation_equivalent(u.scaled, v.scaled);
}

}  // namespace switchmate
