#include "switchmate/ratorth.hpp"

#include <cctype>
#include <numeric>
#include <tuple>

namespace switchmate {

namespace {

constexpr std::int64_t kFanoRow[7] = {-1, 1, 1, 0, 1, 0, 0};

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

MethodId MethodId::qabc(int a, int b, int c) {
    if (a < 1 || b < 2 || (c != 1 && c != -1))
        throw std::invalid_argument("Q(a,b,c): need a >= 1, b >= 2, c in {-1,+1}");
    return MethodId{Family::QABC, a, b, c};
}

int MethodId::dimension() const {
    switch (family) {
        case Family::GM4: return 4;
        case Family::GM6: case Family::WQH6: case Family::AH6: return 6;
        case Family::GM8: case Family::WQH8: return 8;
        case Family::FANO: return 7;
        case Family::QABC: return a * b;
    }
    return 0;
}

std::string MethodId::to_string() const {
    switch (family) {
        case Family::GM4: return "GM4";
        case Family::GM6: return "GM6";
        case Family::GM8: return "GM8";
        case Family::WQH6: return "WQH6";
        case Family::WQH8: return "WQH8";
        case Family::AH6: return "AH6";
        case Family::FANO: return "Fano";
        case Family::QABC:
            return "Q(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
    }
    return "?";
}

bool MethodId::operator<(const MethodId& o) const {
    if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

MethodId MethodId::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    std::string upper;
    for (char ch : t) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (upper == "GM4") return named(Family::GM4);
    if (upper == "GM6") return named(Family::GM6);
    if (upper == "GM8") return named(Family::GM8);
    if (upper == "WQH6") return named(Family::WQH6);
    if (upper == "WQH8") return named(Family::WQH8);
    if (upper == "AH6") return named(Family::AH6);
    if (upper == "FANO") return named(Family::FANO);
    if ((upper.rfind("Q(", 0) == 0 || upper.rfind("QABC(", 0) == 0) && upper.back() == ')') {
        const std::size_t open = upper.find('(');
        std::string inner = t.substr(open + 1, t.size() - open - 2);
        int vals[3];
        int k = 0;
        std::size_t pos = 0;
        while (k < 3) {
            const std::size_t comma = inner.find(',', pos);
            const std::string part =
                comma == std::string::npos ? inner.substr(pos) : inner.substr(pos, comma - pos);
            vals[k++] = std::stoi(part);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (k != 3) throw std::invalid_argument("method: expected Q(a,b,c)");
        return qabc(vals[0], vals[1], vals[2]);
    }
    throw std::invalid_argument("method: unknown id '" + text + "'");
}

RationalOrthogonalMatrix build_qabc(int a, int b, int c) {
    if (a < 1 || b < 2 || (c != 1 && c != -1))
        throw std::invalid_argument("Q(a,b,c): need a >= 1, b >= 2, c in {-1,+1}");
    const int m = a * b;
    IntMat s(m, m);
    // diagonal blocks J_a, cyclic subdiagonal blocks c*Y_a with Y_a = aI - J
    for (int bi = 0; bi < b; ++bi) {
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < a; ++j) {
                s.at(bi * a + i, bi * a + j) = 1;
                const int prev = ((bi - 1) % b + b) % b;
                s.at(bi * a + i, prev * a + j) = c * ((i == j ? a : 0) - 1);
            }
        }
    }
    // the J blocks contribute unit entries, so a is already the minimal level
    return RationalOrthogonalMatrix{m, s, a};
}

RationalOrthogonalMatrix build_named(const MethodId& id) {
    using F = MethodId::Family;
    switch (id.family) {
        case F::GM4: return build_qabc(2, 2, 1);
        case F::GM6: return build_qabc(3, 2, -1);
        case F::GM8: return build_qabc(4, 2, -1);
        case F::WQH6: return build_qabc(3, 2, 1);
        case F::WQH8: return build_qabc(4, 2, 1);
        case F::AH6: return build_qabc(2, 3, 1);
        case F::QABC: return build_qabc(id.a, id.b, id.c);
        case F::FANO: {
            IntMat s(7, 7);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) s.at(i, j) = kFanoRow[((j - i) % 7 + 7) % 7];
            return RationalOrthogonalMatrix{7, s, 2};
        }
    }
    throw std::invalid_argument("build_named: bad method id");
}

bool is_orthogonal(const RationalOrthogonalMatrix& q) {
    const IntMat prod = q.scaled.transposed() * q.scaled;
    const std::int64_t l2 = q.level * q.level;
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j)
            if (prod.at(i, j) != (i == j ? l2 : 0)) return false;
    return true;
}

bool is_regular(const RationalOrthogonalMatrix& q) {
    std::int64_t first = 0;
    for (int j = 0; j < q.m; ++j) first += q.scaled.at(0, j);
    for (int i = 1; i < q.m; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < q.m; ++j) s += q.scaled.at(i, j);
        if (s != first) return false;
    }
    return true;
}

bool has_integral_column(const RationalOrthogonalMatrix& q) {
    for (int j = 0; j < q.m; ++j) {
        bool integral = true;
        for (int i = 0; i < q.m && integral; ++i)
            if (q.scaled.at(i, j) % q.level != 0) integral = false;
        if (integral) return true;
    }
    return false;
}

std::int64_t level_of(const IntMat& m, std::int64_t denom) {
    if (denom <= 0) throw std::invalid_argument("level_of: denominator must be positive");
    std::int64_t content = 0;
    for (std::int64_t x : m.a) content = gcd64(content, x);
    content = gcd64(content, denom);
    return denom / (content == 0 ? denom : gcd64(denom, content));
}

std::string RationalOrthogonalMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const std::int64_t v = scaled.at(i, j);
            std::string cell;
            if (v % level == 0) {
                cell = std::to_string(v / level);
            } else {
                const std::int64_t g = gcd64(v, level);
                cell = std::to_string(v / g) + "/" + std::to_string(level / g);
            }
            out += cell;
            if (j + 1 < m) out += std::string(cell.size() < 6 ? 6 - cell.size() : 1, ' ');
        }
        out += "\n";
    }
    return out;
}

namespace {

// Backtrack over the row map, keeping per-column candidate sets consistent
// with every assigned row.
struct EquivSearch {
    const IntMat& u;
    const IntMat& v;
    int m;
    std::array<std::uint8_t, kMaxVertices> rowmap{};
    std::uint16_t rows_used = 0;
    std::array<std::uint16_t, kMaxVertices> colcand{};  // columns of V usable as r(j)

    bool match_columns(int depth, std::array<std::uint8_t, kMaxVertices>& colmap,
                       std::uint16_t used) {
        if (depth == m) return true;
        std::uint16_t cand = colcand[depth] & static_cast<std::uint16_t>(~used);
        while (cand) {
            const int l = std::countr_zero(cand);
            cand &= static_cast<std::uint16_t>(cand - 1);
            colmap[depth] = static_cast<std::uint8_t>(l);
            if (match_columns(depth + 1, colmap, static_cast<std::uint16_t>(used | (1u << l))))
                return true;
        }
        return false;
    }

    bool assign(int i, std::optional<std::pair<Perm, Perm>>& out) {
        if (i == m) {
            std::array<std::uint8_t, kMaxVertices> colmap{};
            if (!match_columns(0, colmap, 0)) return false;
            Perm p = identity_perm(), r = identity_perm();
            for (int k = 0; k < m; ++k) {
                p[k] = rowmap[k];
                r[k] = colmap[k];
            }
            out = std::make_pair(p, r);
            return true;
        }
        for (int k = 0; k < m; ++k) {
            if (rows_used & (1u << k)) continue;
            // tentatively map row i of U to row k of V; narrow column candidates
            std::array<std::uint16_t, kMaxVertices> saved = colcand;
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                std::uint16_t narrowed = 0;
                std::uint16_t cand = colcand[j];
                while (cand) {
                    const int l = std::countr_zero(cand);
                    cand &= static_cast<std::uint16_t>(cand - 1);
                    if (v.at(k, l) == u.at(i, j)) narrowed |= static_cast<std::uint16_t>(1u << l);
                }
                colcand[j] = narrowed;
                if (narrowed == 0) ok = false;
            }
            if (ok) {
                rowmap[i] = static_cast<std::uint8_t>(k);
                rows_used |= static_cast<std::uint16_t>(1u << k);
                if (assign(i + 1, out)) return true;
                rows_used &= static_cast<std::uint16_t>(~(1u << k));
            }
            colcand = saved;
        }
        return false;
    }
};

}  // namespace

std::optional<std::pair<Perm, Perm>> permutation_equivalent(const IntMat& u, const IntMat& v) {
    if (u.rows != v.rows || u.cols != v.cols || u.rows != u.cols)
        throw std::invalid_argument("permutation_equivalent: dimension mismatch");
    const int m = u.rows;
    if (m > kMaxVertices) throw std::invalid_argument("permutation_equivalent: dimension > 16");
    EquivSearch s{u, v, m};
    for (int j = 0; j < m; ++j) s.colcand[j] = static_cast<std::uint16_t>((1u << m) - 1u);
    std::optional<std::pair<Perm, Perm>> out;
    s.assign(0, out);
    return out;
}

}  // namespace switchmate
