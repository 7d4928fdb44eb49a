#pragma once

// Brute-force reference implementations. They share no code with the kernel
// beyond the value types, and favour obviousness over speed.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "tubecat/int_matrix.hpp"
#include "tubecat/tube.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;
using Dense = std::vector<std::vector<std::int64_t>>;

/// Every set partition of {1..n}, via restricted growth strings.
inline std::vector<Blocks> all_set_partitions(int n) {
    std::vector<Blocks> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            Blocks b(static_cast<std::size_t>(used));
            for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(rgs[static_cast<std::size_t>(k)])].push_back(k + 1);
            out.push_back(std::move(b));
            return;
        }
        for (int c = 0; c <= used; ++c) {
            rgs[static_cast<std::size_t>(i)] = c;
            rec(i + 1, c == used ? used + 1 : used);
        }
    };
    rec(0, 0);
    return out;
}

/// Quadruple test over all a<b<c<d of the circular labels.
inline bool has_crossing(const Blocks& blocks, int total) {
    std::vector<int> owner(static_cast<std::size_t>(total + 1), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (int x : blocks[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    auto o = [&](int x) { return owner[static_cast<std::size_t>(x)]; };
    for (int a = 1; a <= total; ++a)
        for (int b = a + 1; b <= total; ++b)
            for (int c = b + 1; c <= total; ++c)
                for (int d = c + 1; d <= total; ++d)
                    if (o(a) == o(c) && o(b) == o(d) && o(a) != o(b)) return true;
    return false;
}

inline std::vector<Blocks> noncrossing_partitions(int total) {
    std::vector<Blocks> out;
    for (auto& b : all_set_partitions(total)) {
        if (!has_crossing(b, total)) out.push_back(std::move(b));
    }
    return out;
}

/// |Hom(a, b)| by recursion over noncrossing outer partitions.
inline std::uint64_t hom_count(const tubecat::TubeObject& a, const tubecat::TubeObject& b) {
    const int m = a.arity(), n = b.arity();
    if (m + n == 0) return 1;
    std::uint64_t total = 0;
    for (const auto& blocks : noncrossing_partitions(m + n)) {
        std::uint64_t prod = 1;
        for (const auto& blk : blocks) {
            std::vector<tubecat::TubeObject> up, down;
            for (int x : blk) {
                if (x <= m) {
                    for (const auto& c : a.child(x - 1).children()) up.push_back(c);
                }
            }
            // Lower label x sits at position m+n+1-x; collect left to right.
            for (int pos = 1; pos <= n; ++pos) {
                const int label = m + n + 1 - pos;
                for (int x : blk) {
                    if (x == label) {
                        for (const auto& c : b.child(pos - 1).children()) down.push_back(c);
                    }
                }
            }
            prod *= hom_count(tubecat::TubeObject::node(up), tubecat::TubeObject::node(down));
        }
        total += prod;
    }
    return total;
}

/// T_p for a base partition: entry (w, v) is 1 iff every block is constant
/// on the letters, with both rows read left to right.
inline Dense base_matrix(const tubecat::NCPartition& p, int alphabet) {
    const int m = p.m(), n = p.n();
    auto power = [&](int k) {
        std::size_t r = 1;
        for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(alphabet);
        return r;
    };
    const std::size_t rows = power(n), cols = power(m);
    Dense d(rows, std::vector<std::int64_t>(cols, 0));
    std::vector<int> letter(static_cast<std::size_t>(m + n + 1));
    for (std::size_t v = 0; v < cols; ++v) {
        for (std::size_t w = 0; w < rows; ++w) {
            std::size_t t = v;
            for (int i = m; i >= 1; --i, t /= static_cast<std::size_t>(alphabet))
                letter[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::size_t>(alphabet));
            t = w;
            for (int pos = n; pos >= 1; --pos, t /= static_cast<std::size_t>(alphabet))
                letter[static_cast<std::size_t>(m + n + 1 - pos)] = static_cast<int>(t % static_cast<std::size_t>(alphabet));
            bool ok = true;
            for (const auto& blk : p.blocks()) {
                for (int x : blk) ok = ok && letter[static_cast<std::size_t>(x)] == letter[static_cast<std::size_t>(blk[0])];
            }
            d[w][v] = ok ? 1 : 0;
        }
    }
    return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Dense c(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Dense kron(const Dense& a, const Dense& b) {
    const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0, br = b.size(), bc = br ? b[0].size() : 0;
    Dense c(ar * br, std::vector<std::int64_t>(ac * bc, 0));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return c;
}

inline Dense transpose(const Dense& a) {
    const std::size_t r = a.size(), c = r ? a[0].size() : 0;
    Dense t(c, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
    return t;
}

inline Dense scaled(Dense a, std::int64_t k) {
    for (auto& row : a)
        for (auto& x : row) x *= k;
    return a;
}

/// Rank over Q by plain Gaussian elimination on exact rationals.
inline std::size_t rank(const Dense& a) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> m;
    for (const auto& row : a) m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Row-major flattening, one matrix per output row.
inline Dense vectorize(const std::vector<Dense>& mats) {
    Dense out;
    for (const auto& m : mats) {
        std::vector<std::int64_t> row;
        for (const auto& r : m) row.insert(row.end(), r.begin(), r.end());
        out.push_back(std::move(row));
    }
    return out;
}

inline Dense identity(std::size_t n) {
    Dense d(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

}  // namespace oracle
